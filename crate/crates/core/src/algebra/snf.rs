//! Abelianization through the Smith normal form of the relation matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::presentation::Presentation;
use super::word::exponent_sums;

/// `Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | t_2 | ...` and every `t_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub betti: usize,
    #[serde(serialize_with = "decimal")]
    pub torsion: Vec<BigInt>,
}

/// Invariant factors as JSON numbers when they fit in `u64`, strings otherwise.
fn decimal<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for t in v {
        match u64::try_from(t) {
            Ok(x) => seq.serialize_element(&x)?,
            Err(_) => seq.serialize_element(&t.to_string())?,
        }
    }
    seq.end()
}

impl Abelianization {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|t| u64::try_from(t).unwrap_or(u64::MAX))
            .collect()
    }
}

pub fn abelianization(p: &Presentation) -> Abelianization {
    let n = p.generators.len();
    let rows: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| exponent_sums(r, n).into_iter().map(BigInt::from).collect())
        .collect();
    let diag = smith_diagonal(rows, n);
    let rank = diag.len();
    let torsion = diag.into_iter().filter(|d| *d > BigInt::from(1)).collect();
    Abelianization {
        betti: n - rank,
        torsion,
    }
}

/// Non-zero invariant factors of an integer matrix with `cols` columns, in
/// divisibility order.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest non-zero entry in the remaining block as pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let (head, tail) = m.split_at_mut(i);
                for (x, p) in tail[0].iter_mut().zip(&head[t]).skip(t) {
                    *x -= &q * p;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility against the rest of the block.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&m[i][j] % &m[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let (head, tail) = m.split_at_mut(i);
                    for (a, b) in head[t].iter_mut().zip(&tail[0]).skip(t) {
                        *a += b;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::word::Letter;

    fn pres(n: usize, rels: Vec<Vec<(usize, i8)>>) -> Presentation {
        Presentation {
            generators: (0..n).map(|i| format!("x{i}")).collect(),
            relators: rels
                .into_iter()
                .map(|r| r.into_iter().map(|(gen, exp)| Letter { gen, exp }).collect())
                .collect(),
        }
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn free_and_cyclic() {
        let a = abelianization(&pres(3, vec![]));
        assert_eq!((a.betti, a.torsion.len()), (3, 0));
        let a = abelianization(&pres(1, vec![vec![(0, 1), (0, 1)]]));
        assert_eq!(a.betti, 0);
        assert_eq!(a.torsion, ints(&[2]));
    }

    #[test]
    fn diagonal_of_known_matrices() {
        let m = vec![ints(&[2, 4, 4]), ints(&[-6, 6, 12]), ints(&[10, -4, -16])];
        assert_eq!(smith_diagonal(m, 3), ints(&[2, 6, 12]));
        let m = vec![ints(&[2, 0]), ints(&[0, 3])];
        assert_eq!(smith_diagonal(m, 2), ints(&[1, 6]));
        assert!(smith_diagonal(vec![ints(&[0, 0])], 2).is_empty());
    }

    #[test]
    fn commutator_is_invisible() {
        let a = abelianization(&pres(2, vec![vec![(0, 1), (1, 1), (0, -1), (1, -1)]]));
        assert_eq!(a.betti, 2);
        assert!(a.torsion.is_empty());
    }
}
