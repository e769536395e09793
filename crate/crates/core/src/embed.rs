//! Letter-substitution homomorphisms `F(X) → F(Y)` that keep a chosen element
//! nontrivial and fix the shared letters, and the diagonal map of all of them
//! into a product of copies of `F(Y)`, checked on finite balls.
//!
//! The index set (all nontrivial elements of `F(X)`) is truncated to a ball
//! and `Y` is finite, so a target letter has to be available for each letter
//! of the element's support that `Y` does not already contain.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::word::{push_reduced, Alphabet, Word};

/// A homomorphism of free groups given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Homomorphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::Config(format!(
                "{} letter images given for an alphabet of {} letters",
                images.len(),
                source.rank()
            )));
        }
        for img in &images {
            if let Some(l) = img
                .letters()
                .iter()
                .find(|l| l.letter as usize >= target.rank())
            {
                return Err(Error::AlphabetMismatch {
                    letter: l.letter,
                    rank: target.rank(),
                });
            }
        }
        Ok(Homomorphism {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image_of_letter(&self, letter: u32) -> &Word {
        &self.images[letter as usize]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut stack = Vec::with_capacity(w.len());
        for &l in w.letters() {
            let img = self
                .images
                .get(l.letter as usize)
                .ok_or(Error::AlphabetMismatch {
                    letter: l.letter,
                    rank: self.source.rank(),
                })?;
            if l.inverse {
                for &m in img.letters().iter().rev() {
                    push_reduced(&mut stack, m.inv());
                }
            } else {
                for &m in img.letters() {
                    push_reduced(&mut stack, m);
                }
            }
        }
        Ok(Word::reduce(stack))
    }
}

/// Builds `φ_g` for `g ≠ e`: shared letters map to themselves, letters of
/// `supp(g)` outside `Y` get distinct target letters not used by the rest of
/// the support (fresh letters of `Y ∖ X` first, then letters of `X ∩ Y` that
/// `g` does not use), and remaining letters reuse the same pool cyclically.
pub fn build_phi_g(g: &Word, source: &Alphabet, target: &Alphabet) -> Result<Homomorphism> {
    if g.is_identity() {
        return Err(Error::TrivialElement);
    }
    let support = g.support();
    let shared = |x: u32| target.lookup(source.name(x));
    let support_names: BTreeSet<&str> = support.iter().map(|&x| source.name(x)).collect();

    let fresh = (0..target.rank() as u32).filter(|&y| !source.contains(target.name(y)));
    let unused_shared = (0..target.rank() as u32)
        .filter(|&y| source.contains(target.name(y)) && !support_names.contains(target.name(y)));
    let pool: Vec<u32> = fresh.chain(unused_shared).collect();

    let needed: Vec<u32> = support
        .iter()
        .copied()
        .filter(|&x| shared(x).is_none())
        .collect();
    if needed.len() > pool.len() {
        return Err(Error::TargetTooSmall {
            needed: needed.len(),
            available: pool.len(),
        });
    }

    let mut images = Vec::with_capacity(source.rank());
    let mut next = needed.len();
    for x in 0..source.rank() as u32 {
        let y = if let Some(y) = shared(x) {
            y
        } else if let Some(i) = needed.iter().position(|&n| n == x) {
            pool[i]
        } else if pool.is_empty() {
            0
        } else {
            let y = pool[next % pool.len()];
            next += 1;
            y
        };
        images.push(Word::generator(y));
    }
    Homomorphism::new(source.clone(), target.clone(), images)
}

/// A point of the product `F(Y)^I`, coordinates aligned with the index list
/// of the [`DiagonalMap`] that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductElement {
    pub coordinates: Vec<Word>,
}

impl ProductElement {
    pub fn is_identity(&self) -> bool {
        self.coordinates.iter().all(Word::is_identity)
    }
}

/// `φ : F(X) → F(Y)^I` with `π_g ∘ φ = φ_g` for every index `g`.
#[derive(Clone, Debug)]
pub struct DiagonalMap {
    indices: Vec<Word>,
    coordinates: Vec<Homomorphism>,
}

impl DiagonalMap {
    pub fn indices(&self) -> &[Word] {
        &self.indices
    }

    pub fn coordinate_map(&self, i: usize) -> &Homomorphism {
        &self.coordinates[i]
    }

    pub fn apply(&self, h: &Word) -> Result<ProductElement> {
        let coordinates = self
            .coordinates
            .iter()
            .map(|phi| phi.apply(h))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductElement { coordinates })
    }
}

/// Indexes by the nontrivial elements of the radius-`radius` ball of `F(X)`.
pub fn build_phi(source: &Alphabet, target: &Alphabet, radius: usize) -> Result<DiagonalMap> {
    let indices: Vec<Word> = source.ball(radius).into_iter().skip(1).collect();
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let coordinates = indices
        .iter()
        .map(|g| build_phi_g(g, source, target))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagonalMap {
        indices,
        coordinates,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoReport {
    pub indices: Vec<Word>,
    /// Ball elements pushed through `φ`.
    pub checked: usize,
    pub injective: bool,
    /// Human-readable descriptions of every failed check.
    pub failures: Vec<String>,
    /// Finite stand-ins used for the infinite index set and target alphabet.
    pub notes: Vec<String>,
}

impl MonoReport {
    pub fn passed(&self) -> bool {
        self.injective && self.failures.is_empty()
    }
}

/// Checks on the radius-`radius` ball of `F(X)`:
/// each `φ_g(g) ≠ e` with the same length as `g`, each `φ_g` fixes `X ∩ Y`,
/// the coordinate of `φ(h)` at index `h` is nontrivial, and `φ` is injective.
pub fn check_mono_on_ball(
    source: &Alphabet,
    target: &Alphabet,
    radius: usize,
    exec: Exec,
) -> Result<MonoReport> {
    let phi = build_phi(source, target, radius)?;
    let fmt_x = |w: &Word| source.format(w);
    let mut failures = Vec::new();

    let shared: Vec<(u32, u32)> = (0..source.rank() as u32)
        .filter_map(|x| target.lookup(source.name(x)).map(|y| (x, y)))
        .collect();
    for (g, phi_g) in phi.indices.iter().zip(&phi.coordinates) {
        let img = phi_g.apply(g)?;
        if img.is_identity() {
            failures.push(format!("φ_g(g) = e for g = {}", fmt_x(g)));
        } else if img.len() != g.len() {
            failures.push(format!("φ_g shortens g = {}", fmt_x(g)));
        }
        for &(x, y) in &shared {
            if *phi_g.image_of_letter(x) != Word::generator(y) {
                failures.push(format!(
                    "φ_g moves shared letter {} for g = {}",
                    source.name(x),
                    fmt_x(g)
                ));
            }
        }
    }

    let ball = source.ball(radius);
    let images = par::map(exec, &ball, |h| phi.apply(h));
    let mut seen: HashMap<ProductElement, &Word> = HashMap::with_capacity(ball.len());
    let mut injective = true;
    for (i, (h, img)) in ball.iter().zip(images).enumerate() {
        let img = img?;
        // the index list is the ball without e, so h sits at position i - 1
        if i > 0 && img.coordinates[i - 1].is_identity() {
            failures.push(format!(
                "coordinate at index h vanishes for h = {}",
                fmt_x(h)
            ));
        }
        if let Some(prev) = seen.insert(img, h) {
            injective = false;
            failures.push(format!("φ({}) = φ({})", fmt_x(prev), fmt_x(h)));
        }
    }

    let notes = vec![
        format!(
            "index set truncated to the radius-{radius} ball ({} indices)",
            phi.indices.len()
        ),
        format!("target alphabet is finite ({} letters)", target.rank()),
    ];
    Ok(MonoReport {
        indices: phi.indices,
        checked: ball.len(),
        injective,
        failures,
        notes,
    })
}
