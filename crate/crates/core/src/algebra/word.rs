//! Words in free groups: sequences of generators with exponent ±1.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    /// `1` or `-1`.
    pub exp: i8,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, exp: 1 }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, exp: -1 }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            exp: -self.exp,
        }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancelling inverse letters at the two ends.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Least word among the cyclic rotations of `w` and of its inverse. Two
/// cyclically reduced relators define the same normal subgroup generator up to
/// conjugation and inversion when their keys agree.
pub fn relator_key(w: &[Letter]) -> Word {
    let inv = inverse(w);
    let mut best = w.to_vec();
    for base in [w, inv.as_slice()] {
        for k in 0..base.len() {
            let rot: Word = base[k..].iter().chain(&base[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

/// Exponent sum of each generator.
pub fn exponent_sums(w: &[Letter], generators: usize) -> Vec<i64> {
    let mut v = vec![0i64; generators];
    for l in w {
        v[l.gen] += i64::from(l.exp);
    }
    v
}

/// Renders a word with the given generator names, `1` for the empty word.
pub fn display<'a>(w: &'a [Letter], names: &'a [String]) -> impl fmt::Display + 'a {
    struct Show<'a>(&'a [Letter], &'a [String]);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.0.is_empty() {
                return f.write_str("1");
            }
            for (i, l) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                let name = self.1.get(l.gen).map_or("?", String::as_str);
                if l.exp < 0 {
                    write!(f, "{name}^-1")?;
                } else {
                    f.write_str(name)?;
                }
            }
            Ok(())
        }
    }
    Show(w, names)
}
