//! Right-angled Artin groups and a normal form for their words.

use crate::bits::BitSet;
use crate::error::{Error, Result};

use super::word::{Letter, Word};

/// Generators with a symmetric, irreflexive commutation relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagSpec {
    names: Vec<String>,
    commute: Vec<BitSet>,
}

impl RaagSpec {
    pub fn new<I>(names: Vec<String>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = names.len();
        let mut commute = vec![BitSet::new(n); n];
        for (a, b) in pairs {
            if a >= n {
                return Err(Error::UnknownGenerator(a));
            }
            if b >= n {
                return Err(Error::UnknownGenerator(b));
            }
            if a == b {
                return Err(Error::Malformed(format!(
                    "generator {a} declared to commute with itself"
                )));
            }
            commute[a].insert(b);
            commute[b].insert(a);
        }
        Ok(RaagSpec { names, commute })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.commute[a].contains(b)
    }

    fn check(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|l| l.gen >= self.names.len()) {
            Some(l) => Err(Error::UnknownGenerator(l.gen)),
            None => Ok(()),
        }
    }

    /// Canonical form: a reduced word, then the least representative of its
    /// commutation class in (generator, exponent) order. The result is empty
    /// exactly when `w` is the identity.
    ///
    /// A word is reduced once no letter `x^e` is followed, after letters that
    /// all commute with `x`, by `x^-e`; any two reduced words of the same
    /// element differ by commuting adjacent letters.
    pub fn normal_form(&self, w: &[Letter]) -> Result<Word> {
        self.check(w)?;
        let reduced = self.reduce(w);
        Ok(self.least_representative(reduced))
    }

    pub fn is_identity(&self, w: &[Letter]) -> Result<bool> {
        Ok(self.normal_form(w)?.is_empty())
    }

    fn reduce(&self, w: &[Letter]) -> Word {
        // Letters are appended one at a time; an incoming letter cancels the
        // latest earlier inverse it can commute past.
        let mut out: Word = Vec::with_capacity(w.len());
        for &l in w {
            let mut cancel = None;
            for k in (0..out.len()).rev() {
                let m = out[k];
                if m == l.inverse() {
                    cancel = Some(k);
                    break;
                }
                if !self.commute(m.gen, l.gen) {
                    break;
                }
            }
            match cancel {
                Some(k) => {
                    out.remove(k);
                }
                None => out.push(l),
            }
        }
        out
    }

    fn least_representative(&self, mut rest: Word) -> Word {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            // Letters that can be shuffled to the front.
            let mut best: Option<usize> = None;
            for k in 0..rest.len() {
                let l = rest[k];
                let free = rest[..k]
                    .iter()
                    .all(|m| m.gen != l.gen && self.commute(m.gen, l.gen));
                if free && best.is_none_or(|b| l < rest[b]) {
                    best = Some(k);
                }
            }
            let k = best.expect("the first letter is always movable");
            out.push(rest.remove(k));
        }
        out
    }
}
