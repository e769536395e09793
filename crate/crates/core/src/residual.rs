//! Finite permutation representations that separate a given element from the
//! identity.
//!
//! Permutations act on the right: the image of a word applies its letters
//! from left to right, so `apply(u·v) = apply(u).then(&apply(v))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::InvalidPermutation(format!("{images:?}"))),
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A homomorphism `F(X) → Sym(degree)`, one permutation per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermRep {
    degree: usize,
    letters: Vec<Permutation>,
}

impl PermRep {
    pub fn new(degree: usize, letters: Vec<Permutation>) -> Result<Self> {
        if let Some(p) = letters.iter().find(|p| p.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "{p} does not have degree {degree}"
            )));
        }
        Ok(PermRep { degree, letters })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letter(&self, letter: u32) -> &Permutation {
        &self.letters[letter as usize]
    }

    pub fn letters(&self) -> &[Permutation] {
        &self.letters
    }
}

pub fn apply_perm_rep(rep: &PermRep, w: &Word) -> Result<Permutation> {
    let mut state: Vec<u32> = (0..rep.degree as u32).collect();
    let inverses: Vec<Permutation> = rep.letters.iter().map(Permutation::inverse).collect();
    for l in w.letters() {
        let i = l.letter as usize;
        if i >= rep.letters.len() {
            return Err(Error::AlphabetMismatch {
                letter: l.letter,
                rank: rep.letters.len(),
            });
        }
        let p = if l.inverse {
            &inverses[i]
        } else {
            &rep.letters[i]
        };
        for s in &mut state {
            *s = p.apply(*s);
        }
    }
    Ok(Permutation { images: state })
}

/// Permutation representation of degree `|g| + 1` on the prefixes of `g`
/// whose image of `g` sends `0` to `|g|`.
///
/// The `i`-th signed letter `ℓ^{±1}` of `g` contributes `i ↦ i+1` (or
/// `i+1 ↦ i` for an inverse letter) to the partial injection of `ℓ`; each
/// partial injection is completed by pairing leftover sources with leftover
/// targets in increasing order.
pub fn separate(g: &Word, alphabet: &Alphabet) -> Result<PermRep> {
    if g.is_identity() {
        return Err(Error::TrivialElement);
    }
    let degree = g.len() + 1;
    let mut partial: Vec<Vec<Option<u32>>> = vec![vec![None; degree]; alphabet.rank()];
    for (i, l) in g.letters().iter().enumerate() {
        let idx = l.letter as usize;
        if idx >= alphabet.rank() {
            return Err(Error::AlphabetMismatch {
                letter: l.letter,
                rank: alphabet.rank(),
            });
        }
        let (src, dst) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        let map = &mut partial[idx];
        // a reduced word never asks one state for two images
        assert!(map[src].is_none(), "prefix path is not a partial injection");
        assert!(
            !map.contains(&Some(dst as u32)),
            "prefix path is not a partial injection"
        );
        map[src] = Some(dst as u32);
    }
    let letters = partial
        .into_iter()
        .map(|map| {
            let mut hit = vec![false; degree];
            for &t in map.iter().flatten() {
                hit[t as usize] = true;
            }
            let mut free_targets = (0..degree as u32).filter(|&t| !hit[t as usize]);
            let images = map
                .iter()
                .map(|t| t.unwrap_or_else(|| free_targets.next().expect("counts match")))
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermRep::new(degree, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn single_letter() {
        let x = ab();
        let rep = separate(&x.parse("a").unwrap(), &x).unwrap();
        assert_eq!(rep.degree(), 2);
        assert_eq!(rep.letter(0).to_string(), "(0 1)");
        assert!(rep.letter(1).is_identity());
        let img = apply_perm_rep(&rep, &x.parse("a").unwrap()).unwrap();
        assert!(!img.is_identity());
        assert!(apply_perm_rep(&rep, &x.parse("a^2").unwrap())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn three_letter_word() {
        let x = ab();
        let g = x.parse("a b^-1 a").unwrap();
        let rep = separate(&g, &x).unwrap();
        assert_eq!(rep.degree(), 4);
        // hand-computed: a = {0→1, 2→3} completed by 1→0, 3→2; b = {2→1} completed
        assert_eq!(rep.letter(0).images(), &[1, 0, 3, 2]);
        assert_eq!(rep.letter(1).images(), &[0, 2, 1, 3]);
        let img = apply_perm_rep(&rep, &g).unwrap();
        assert_eq!(img.apply(0), 3);
    }

    #[test]
    fn commutator() {
        let x = ab();
        let g = x.parse("a b a^-1 b^-1").unwrap();
        let rep = separate(&g, &x).unwrap();
        assert_eq!(rep.degree(), 5);
        let img = apply_perm_rep(&rep, &g).unwrap();
        assert_eq!(img.apply(0), 4);
        assert!(!img.is_identity());
    }

    #[test]
    fn errors_and_identity() {
        let x = ab();
        assert_eq!(separate(&Word::identity(), &x), Err(Error::TrivialElement));
        let rep = separate(&x.parse("a").unwrap(), &x).unwrap();
        assert!(apply_perm_rep(&rep, &Word::identity())
            .unwrap()
            .is_identity());
        let bigger = Alphabet::new(["a", "b", "c"]).unwrap();
        let err = apply_perm_rep(&rep, &bigger.parse("c").unwrap()).unwrap_err();
        assert_eq!(err, Error::AlphabetMismatch { letter: 2, rank: 2 });
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_images(vec![1, 2, 0, 3]).unwrap();
        assert_eq!(p.to_string(), "(0 1 2)");
        assert!(p.then(&p.inverse()).is_identity());
        let q = Permutation::from_images(vec![0, 1, 3, 2]).unwrap();
        // 0 → 1 under p, then q fixes 1
        assert_eq!(p.then(&q).apply(0), 1);
        assert_eq!(p.then(&q).apply(1), 3);
    }
}
