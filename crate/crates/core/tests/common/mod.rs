#![allow(dead_code)]

use fgz_core::word::{SignedLetter, VARIABLE};
use fgz_core::{AlgebraicSet, Alphabet, CyclicCoset, OneVarWord, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ab() -> Alphabet {
    Alphabet::new(["a", "b"]).unwrap()
}

pub fn w(text: &str) -> Word {
    ab().parse(text).unwrap()
}

pub fn v(text: &str) -> OneVarWord {
    OneVarWord::parse(&ab(), "x", text).unwrap()
}

pub fn random_letter(rng: &mut ChaCha8Rng, rank: usize) -> SignedLetter {
    SignedLetter {
        letter: rng.gen_range(0..rank as u32),
        inverse: rng.gen(),
    }
}

/// A reduced word of length exactly `len`.
pub fn random_word_of_len(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> Word {
    let mut letters: Vec<SignedLetter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, rank);
        if letters.last().is_some_and(|t| t.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::reduce(letters)
}

pub fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, rank, len)
}

pub fn random_nontrivial(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    random_word_of_len(rng, rank, len)
}

/// A one-variable word whose body has at most `max_len` letters and at least
/// one occurrence of the variable.
pub fn random_onevar(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> OneVarWord {
    loop {
        let len = rng.gen_range(1..=max_len);
        let letters: Vec<SignedLetter> = (0..len)
            .map(|_| {
                if rng.gen_bool(0.35) {
                    SignedLetter {
                        letter: VARIABLE,
                        inverse: rng.gen(),
                    }
                } else {
                    random_letter(rng, rank)
                }
            })
            .collect();
        let w = OneVarWord::from_letters(letters);
        if w.occurrences() > 0 {
            return w;
        }
    }
}

/// Repeated multiplication, independent of `Word::pow`.
pub fn naive_pow(r: &Word, k: i64) -> Word {
    let step = if k < 0 { r.inverse() } else { r.clone() };
    (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.multiply(&step))
}

/// Substitution by concatenation and one final free reduction, independent of
/// `OneVarWord::evaluate`.
pub fn naive_evaluate(w: &OneVarWord, g: &Word) -> Word {
    let g_inv = g.inverse();
    let mut letters = Vec::new();
    for &l in w.body().letters() {
        if l.letter == VARIABLE {
            letters.extend_from_slice(if l.inverse {
                g_inv.letters()
            } else {
                g.letters()
            });
        } else {
            letters.push(l);
        }
    }
    Word::reduce(letters)
}

pub fn random_primitive(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    loop {
        let r = random_nontrivial(rng, rank, max_len);
        if r.is_primitive() {
            return r;
        }
    }
}

/// Random algebraic set over F(a,b) with small components, so that distinct
/// operands often overlap.
pub fn random_set(rng: &mut ChaCha8Rng) -> AlgebraicSet {
    let npoints = rng.gen_range(0..=4);
    let ncosets = rng.gen_range(0..=3);
    let points = (0..npoints).map(|_| random_word(rng, 2, 3)).collect();
    let cosets = (0..ncosets)
        .map(|_| {
            let root = random_primitive(rng, 2, 2);
            CyclicCoset::new(random_word(rng, 2, 2), root).unwrap()
        })
        .collect();
    AlgebraicSet::from_parts(points, cosets)
}

/// Independent check of the canonical shape: sorted distinct components,
/// primitive oriented roots, shortlex-minimal representatives (searched over a
/// generous exponent window) and no point inside a listed coset.
pub fn shape_violations(s: &AlgebraicSet) -> Vec<String> {
    let mut out = Vec::new();
    if !s.points().windows(2).all(|p| p[0] < p[1]) {
        out.push("points not strictly sorted".into());
    }
    if !s.cosets().windows(2).all(|p| p[0] < p[1]) {
        out.push("cosets not strictly sorted".into());
    }
    for c in s.cosets() {
        let r = c.root();
        if r.is_identity() || !r.is_primitive() {
            out.push(format!("root {r:?} not primitive"));
        }
        if r.inverse() < *r {
            out.push(format!("root {r:?} not oriented"));
        }
        let window = 3 * (c.rep().len() + r.len()) as i64 + 4;
        for m in -window..=window {
            let other = c.rep().multiply(&naive_pow(r, m));
            if other < *c.rep() {
                out.push(format!("rep {:?} beaten by {other:?}", c.rep()));
                break;
            }
        }
        for p in s.points() {
            if c.contains(p) {
                out.push(format!("point {p:?} inside coset"));
            }
        }
    }
    out
}

/// Members of `s` in a ball, by direct membership tests.
pub fn members_in(s: &AlgebraicSet, ball: &[Word]) -> std::collections::BTreeSet<Word> {
    ball.iter().filter(|g| s.contains(g)).cloned().collect()
}
