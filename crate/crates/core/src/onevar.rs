//! One-variable words `w ∈ F(X) * ⟨x⟩`, evaluation `x ↦ g`, and parametric
//! words used to decide whether a whole cyclic line `a⟨r⟩` solves `w = 1`.

use std::cmp::Reverse;
use std::fmt;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::word::{
    format_letters, is_identifier, orient, parse_terms, push_reduced, Alphabet, SignedLetter, Word,
    VARIABLE,
};

pub const DEFAULT_VARIABLE: &str = "x";

/// A reduced word over `X ∪ {x}`; the variable is the letter [`VARIABLE`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneVarWord {
    body: Word,
}

impl OneVarWord {
    pub fn from_letters<I: IntoIterator<Item = SignedLetter>>(letters: I) -> Self {
        OneVarWord {
            body: Word::reduce(letters),
        }
    }

    pub fn constant(w: &Word) -> Self {
        OneVarWord { body: w.clone() }
    }

    pub fn variable() -> Self {
        OneVarWord {
            body: Word::generator(VARIABLE),
        }
    }

    pub fn parse(alphabet: &Alphabet, var: &str, text: &str) -> Result<Self> {
        check_variable(alphabet, var)?;
        let letters = parse_terms(text, |ident| {
            if ident == var {
                Ok(VARIABLE)
            } else {
                alphabet
                    .lookup(ident)
                    .ok_or_else(|| Error::UnknownLetter(ident.to_string()))
            }
        })?;
        Ok(Self::from_letters(letters))
    }

    pub fn format(&self, alphabet: &Alphabet, var: &str) -> String {
        format_letters(self.body.letters(), |l| {
            if l == VARIABLE {
                var.to_string()
            } else {
                alphabet.name(l).to_string()
            }
        })
    }

    pub fn body(&self) -> &Word {
        &self.body
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        self.body.is_identity()
    }

    /// Number of occurrences of `x^{±1}`.
    pub fn occurrences(&self) -> usize {
        self.body
            .letters()
            .iter()
            .filter(|l| l.letter == VARIABLE)
            .count()
    }

    /// The coefficient word when `x` does not occur.
    pub fn as_constant(&self) -> Option<&Word> {
        (self.occurrences() == 0).then_some(&self.body)
    }

    pub fn multiply(&self, other: &OneVarWord) -> OneVarWord {
        OneVarWord {
            body: self.body.multiply(&other.body),
        }
    }

    pub fn inverse(&self) -> OneVarWord {
        OneVarWord {
            body: self.body.inverse(),
        }
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate(&self, u: &OneVarWord) -> OneVarWord {
        OneVarWord {
            body: self.body.conjugate(&u.body),
        }
    }

    /// The word obtained by substituting `x⁻¹` for `x`.
    pub fn invert_variable(&self) -> OneVarWord {
        Self::from_letters(self.body.letters().iter().map(|&l| {
            if l.letter == VARIABLE {
                l.inv()
            } else {
                l
            }
        }))
    }

    /// `ev_g(w)`: substitute `g` for `x` and reduce.
    pub fn evaluate(&self, g: &Word) -> Word {
        let g_inv = g.inverse();
        let mut stack = Vec::with_capacity(self.len() * (1 + g.len()));
        for &l in self.body.letters() {
            if l.letter == VARIABLE {
                let sub = if l.inverse { &g_inv } else { g };
                for &m in sub.letters() {
                    push_reduced(&mut stack, m);
                }
            } else {
                push_reduced(&mut stack, l);
            }
        }
        Word::from_reduced(stack)
    }

    pub fn is_solution(&self, g: &Word) -> bool {
        self.evaluate(g).is_identity()
    }
}

impl fmt::Debug for OneVarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.body)
    }
}

pub(crate) fn check_variable(alphabet: &Alphabet, var: &str) -> Result<()> {
    if var == "e" || var == "1" {
        return Err(Error::ReservedSymbol(var.to_string()));
    }
    if !is_identifier(var) {
        return Err(Error::InvalidLetterName(var.to_string()));
    }
    if alphabet.contains(var) {
        return Err(Error::VariableInAlphabet(var.to_string()));
    }
    Ok(())
}

/// Elements of the radius-`radius` ball solving `w = 1`, in shortlex order.
pub fn brute_solutions(w: &OneVarWord, alphabet: &Alphabet, radius: usize) -> Vec<Word> {
    brute_solutions_in(w, &alphabet.ball(radius), Exec::default())
}

/// Same as [`brute_solutions`] over a precomputed ball.
pub fn brute_solutions_in(w: &OneVarWord, ball: &[Word], exec: Exec) -> Vec<Word> {
    par::filter(exec, ball, |g| w.is_solution(g))
}

/// A piece of a [`ParametricWord`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    Concrete(Word),
    /// `root^(alpha·n + beta)` for the formal integer `n`.
    Power {
        root: Word,
        alpha: i64,
        beta: i64,
    },
}

impl Block {
    pub fn power(root: Word, alpha: i64, beta: i64) -> Self {
        Block::Power { root, alpha, beta }
    }

    fn concrete_len(&self) -> usize {
        match self {
            Block::Concrete(c) => c.len(),
            Block::Power { .. } => 0,
        }
    }
}

/// A word with power blocks whose exponents are affine in one integer
/// parameter. Blocks are kept normalized: no identity or adjacent concrete
/// blocks, no adjacent powers of the same root, no constant powers, and every
/// root primitive in canonical orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParametricWord {
    blocks: Vec<Block>,
}

impl ParametricWord {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        for b in &blocks {
            if let Block::Power { root, .. } = b {
                check_root(root)?;
            }
        }
        Ok(ParametricWord {
            blocks: normalize(blocks),
        })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn evaluate_at(&self, n: i64) -> Word {
        evaluate_blocks(&self.blocks, n)
    }

    pub fn concrete_len(&self) -> usize {
        self.blocks.iter().map(Block::concrete_len).sum()
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.blocks.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| match b {
                Block::Concrete(c) => alphabet.format(c),
                Block::Power { root, alpha, beta } => {
                    format!("({})^({alpha}n{beta:+})", alphabet.format(root))
                }
            })
            .collect();
        parts.join(" · ")
    }
}

pub(crate) fn check_root(root: &Word) -> Result<()> {
    if root.is_identity() {
        return Err(Error::TrivialRoot);
    }
    let d = root.primitive_root()?;
    if d.exponent != 1 {
        return Err(Error::NonPrimitiveRoot {
            exponent: d.exponent,
        });
    }
    Ok(())
}

fn evaluate_blocks(blocks: &[Block], n: i64) -> Word {
    let mut stack = Vec::new();
    for b in blocks {
        match b {
            Block::Concrete(c) => {
                for &l in c.letters() {
                    push_reduced(&mut stack, l);
                }
            }
            Block::Power { root, alpha, beta } => {
                for &l in root.pow(alpha * n + beta).letters() {
                    push_reduced(&mut stack, l);
                }
            }
        }
    }
    Word::from_reduced(stack)
}

/// Pushes `b` onto `out`, merging with the top block where the merge holds
/// for every value of the parameter.
fn push_block(out: &mut Vec<Block>, b: Block) {
    let b = match b {
        Block::Power {
            root,
            alpha: 0,
            beta,
        } => Block::Concrete(root.pow(beta)),
        Block::Power { root, alpha, beta } => {
            let oriented = orient(root.clone());
            if oriented == root {
                Block::Power { root, alpha, beta }
            } else {
                Block::Power {
                    root: oriented,
                    alpha: -alpha,
                    beta: -beta,
                }
            }
        }
        other => other,
    };
    if matches!(&b, Block::Concrete(c) if c.is_identity()) {
        return;
    }
    match (out.last(), &b) {
        (Some(Block::Concrete(prev)), Block::Concrete(c)) => {
            let merged = prev.multiply(c);
            out.pop();
            push_block(out, Block::Concrete(merged));
        }
        (
            Some(Block::Power {
                root: r1,
                alpha: a1,
                beta: b1,
            }),
            Block::Power {
                root: r2,
                alpha: a2,
                beta: b2,
            },
        ) if r1 == r2 => {
            let merged = Block::Power {
                root: r2.clone(),
                alpha: a1 + a2,
                beta: b1 + b2,
            };
            out.pop();
            push_block(out, merged);
        }
        _ => out.push(b),
    }
}

/// Exponent `j` minimizing `|f(j)|`, searched over a window wide enough to
/// contain every improvement; `0` wins ties so peeling only happens when it
/// strictly shortens the word.
fn best_shift(c: &Word, root: &Word, f: impl Fn(i64) -> Word) -> Option<(i64, Word)> {
    let core = root.cyclic_reduce().core.len().max(1);
    let bound = (2 * c.len() / core + 2) as i64;
    let (j, best) = (-bound..=bound)
        .map(|j| (j, f(j)))
        .min_by_key(|(j, w)| (w.len(), j.unsigned_abs(), Reverse(*j)))?;
    (best.len() < c.len()).then_some((j, best))
}

/// Moves powers of neighbouring roots out of a concrete block and into the
/// adjacent power blocks. Returns whether anything changed.
fn peel(blocks: &mut [Block]) -> bool {
    let mut changed = false;
    for i in 0..blocks.len() {
        let Block::Concrete(c) = &blocks[i] else {
            continue;
        };
        let mut c = c.clone();
        if i > 0 {
            if let Block::Power { root, .. } = &blocks[i - 1] {
                let r = root.clone();
                if let Some((j, rest)) = best_shift(&c, &r, |j| r.pow(-j).multiply(&c)) {
                    if let Block::Power { beta, .. } = &mut blocks[i - 1] {
                        *beta += j;
                    }
                    c = rest;
                    changed = true;
                }
            }
        }
        if i + 1 < blocks.len() {
            if let Block::Power { root, .. } = &blocks[i + 1] {
                let s = root.clone();
                if let Some((j, rest)) = best_shift(&c, &s, |j| c.multiply(&s.pow(-j))) {
                    if let Block::Power { beta, .. } = &mut blocks[i + 1] {
                        *beta += j;
                    }
                    c = rest;
                    changed = true;
                }
            }
        }
        blocks[i] = Block::Concrete(c);
    }
    changed
}

fn normalize(blocks: Vec<Block>) -> Vec<Block> {
    let mut current = blocks;
    loop {
        let mut out = Vec::with_capacity(current.len());
        for b in current {
            push_block(&mut out, b);
        }
        if !peel(&mut out) {
            return out;
        }
        current = out;
    }
}

/// Normal form up to conjugation: rotates blocks while that keeps shrinking
/// the word.
fn normalize_cyclic(blocks: Vec<Block>) -> Vec<Block> {
    let mut current = normalize(blocks);
    let size = |b: &[Block]| (b.len(), b.iter().map(Block::concrete_len).sum::<usize>());
    let mut stale = 0;
    while current.len() >= 2 && stale <= current.len() {
        let before = size(&current);
        let last = current.pop().expect("len >= 2");
        current.insert(0, last);
        current = normalize(current);
        if size(&current) < before {
            stale = 0;
        } else {
            stale += 1;
        }
    }
    current
}

/// Substitutes `x := base · root^n` into `w`.
pub fn substitute_line(w: &OneVarWord, base: &Word, root: &Word) -> Result<ParametricWord> {
    check_root(root)?;
    let base_inv = base.inverse();
    let mut blocks = Vec::with_capacity(2 * w.len());
    for &l in w.body().letters() {
        if l.letter != VARIABLE {
            blocks.push(Block::Concrete(Word::from_reduced(vec![l])));
        } else if l.inverse {
            blocks.push(Block::power(root.clone(), -1, 0));
            blocks.push(Block::Concrete(base_inv.clone()));
        } else {
            blocks.push(Block::Concrete(base.clone()));
            blocks.push(Block::power(root.clone(), 1, 0));
        }
    }
    Ok(ParametricWord {
        blocks: normalize(blocks),
    })
}

/// The integers `n` at which a parametric word reduces to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineSolutionSet {
    AllIntegers,
    /// Sorted, distinct.
    Finite(Vec<i64>),
}

impl LineSolutionSet {
    pub fn contains(&self, n: i64) -> bool {
        match self {
            LineSolutionSet::AllIntegers => true,
            LineSolutionSet::Finite(v) => v.binary_search(&n).is_ok(),
        }
    }
}

/// Rounds of window doubling allowed when a solution shows up just outside
/// the candidate window.
const WINDOW_RETRIES: u32 = 8;

/// Solves `pw(n) = e` over the integers.
///
/// The word is first reduced symbolically up to conjugation, using only
/// rewrites valid for every `n`; if nothing is left it vanishes identically.
/// Otherwise each power block is long enough to survive cancellation once
/// `|alpha·n + beta|` exceeds `C = 2 + ⌈(L + 2U)/p⌉`, where `L` is the total
/// concrete length, `U` the summed conjugator lengths of the roots and `p`
/// the shortest cyclic core, so only a bounded window of `n` needs concrete
/// evaluation.
pub fn reduce_parametric(pw: &ParametricWord) -> LineSolutionSet {
    let blocks = normalize_cyclic(pw.blocks.clone());
    if blocks.is_empty() {
        return LineSolutionSet::AllIntegers;
    }
    let powers: Vec<(&Word, i64, i64)> = blocks
        .iter()
        .filter_map(|b| match b {
            Block::Power { root, alpha, beta } => Some((root, *alpha, *beta)),
            Block::Concrete(_) => None,
        })
        .collect();
    if powers.is_empty() {
        // a single nontrivial concrete block
        return LineSolutionSet::Finite(Vec::new());
    }
    let concrete: usize = blocks.iter().map(Block::concrete_len).sum();
    let mut conj = 0;
    let mut min_core = usize::MAX;
    for (root, _, _) in &powers {
        let d = root.cyclic_reduce();
        conj += 2 * d.conjugator.len();
        min_core = min_core.min(d.core.len());
    }
    let c = 2 + (concrete + conj).div_ceil(min_core) as i64;
    let mut window = powers
        .iter()
        .map(|&(_, alpha, beta)| (c + beta.abs()) / alpha.abs() + 1)
        .max()
        .expect("nonempty");

    let solves = |n: i64| evaluate_blocks(&blocks, n).is_identity();
    let mut found: Vec<i64> = (-window..=window).filter(|&n| solves(n)).collect();
    for _ in 0..WINDOW_RETRIES {
        let outside = (1..=3).any(|k| solves(window + k) || solves(-window - k));
        if !outside {
            break;
        }
        let wider = 2 * window + 3;
        found.extend(
            (-wider..-window)
                .chain(window + 1..=wider)
                .filter(|&n| solves(n)),
        );
        window = wider;
    }
    found.sort_unstable();
    found.dedup();
    LineSolutionSet::Finite(found)
}
