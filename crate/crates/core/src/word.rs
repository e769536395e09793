//! Reduced words in a free group over a finite ordered alphabet.
//!
//! A [`Word`] only stores letter indices; names live in [`Alphabet`], which
//! also owns parsing and printing. Every `Word` value is freely reduced, so
//! structural equality is group equality.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Index of the formal variable in one-variable words. Never a valid index of
/// a user alphabet.
pub const VARIABLE: u32 = u32::MAX;

/// Largest absolute exponent accepted by the parser.
pub const MAX_EXPONENT: i64 = 1 << 20;

/// A generator or its inverse.
///
/// The derived order is the canonical letter order: alphabet position first,
/// then `+1` before `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    pub letter: u32,
    pub inverse: bool,
}

impl SignedLetter {
    pub const fn pos(letter: u32) -> Self {
        SignedLetter {
            letter,
            inverse: false,
        }
    }

    pub const fn neg(letter: u32) -> Self {
        SignedLetter {
            letter,
            inverse: true,
        }
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    #[inline]
    pub fn inv(self) -> Self {
        SignedLetter {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }

    #[inline]
    pub fn cancels(self, other: SignedLetter) -> bool {
        self.letter == other.letter && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<SignedLetter>);

/// Pushes `l` onto a reduced stack, cancelling against the top if possible.
#[inline]
pub(crate) fn push_reduced(stack: &mut Vec<SignedLetter>, l: SignedLetter) {
    match stack.last() {
        Some(&top) if top.cancels(l) => {
            stack.pop();
        }
        _ => stack.push(l),
    }
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(letter: u32) -> Self {
        Word(vec![SignedLetter::pos(letter)])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = SignedLetter>>(letters: I) -> Self {
        let mut stack = Vec::new();
        for l in letters {
            push_reduced(&mut stack, l);
        }
        Word(stack)
    }

    /// Wraps letters that are already known to be reduced.
    pub(crate) fn from_reduced(letters: Vec<SignedLetter>) -> Self {
        debug_assert!(letters.windows(2).all(|p| !p[0].cancels(p[1])));
        Word(letters)
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Same as [`is_identity`](Self::is_identity).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<SignedLetter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<SignedLetter> {
        self.0.last().copied()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut k = 0;
        let (a, b) = (&self.0, &other.0);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].cancels(b[k]) {
            k += 1;
        }
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * k);
        out.extend_from_slice(&a[..a.len() - k]);
        out.extend_from_slice(&b[k..]);
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate(&self, u: &Word) -> Word {
        u.multiply(self).multiply(&u.inverse())
    }

    pub fn pow(&self, k: i64) -> Word {
        if k == 0 || self.is_identity() {
            return Word::identity();
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let n = k.unsigned_abs() as usize;
        // Conjugate form keeps this linear: u c^n u⁻¹ with c cyclically reduced.
        let dec = base.cyclic_reduce();
        let core = dec.core.letters();
        let mut out = Vec::with_capacity(2 * dec.conjugator.len() + n * core.len());
        out.extend_from_slice(dec.conjugator.letters());
        for _ in 0..n {
            out.extend_from_slice(core);
        }
        out.extend(dec.conjugator.letters().iter().rev().map(|l| l.inv()));
        Word(out)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.len() == 1 || !f.cancels(l),
            _ => true,
        }
    }

    /// Splits `self = u · c · u⁻¹` with `c` cyclically reduced and `u` as long
    /// as possible.
    pub fn cyclic_reduce(&self) -> CyclicDecomposition {
        let w = &self.0;
        let n = w.len();
        let mut k = 0;
        while 2 * k + 1 < n && w[k].cancels(w[n - 1 - k]) {
            k += 1;
        }
        CyclicDecomposition {
            conjugator: Word(w[..k].to_vec()),
            core: Word(w[k..n - k].to_vec()),
        }
    }

    /// Writes a nontrivial word as `r^k` with `r` primitive and `k ≥ 1`.
    pub fn primitive_root(&self) -> Result<RootDecomposition> {
        if self.is_identity() {
            return Err(Error::IdentityHasNoRoot);
        }
        let dec = self.cyclic_reduce();
        let core = dec.core.letters();
        let n = core.len();
        let period = (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .find(|&d| (d..n).all(|i| core[i] == core[i - d]))
            .expect("the full length is always a period");
        let root = Word(core[..period].to_vec()).conjugate(&dec.conjugator);
        Ok(RootDecomposition {
            root,
            exponent: (n / period) as u64,
        })
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.primitive_root(), Ok(d) if d.exponent == 1)
    }

    /// `Some(k)` with `self = root^k` when `self` lies in the cyclic subgroup
    /// generated by the primitive word `root`.
    pub fn power_of(&self, root: &Word) -> Option<i64> {
        debug_assert!(root.is_primitive());
        if self.is_identity() {
            return Some(0);
        }
        let d = self.primitive_root().ok()?;
        let k = d.exponent as i64;
        if d.root == *root {
            Some(k)
        } else if d.root == root.inverse() {
            Some(-k)
        } else {
            None
        }
    }

    pub fn commutes_with(&self, other: &Word) -> bool {
        if self.is_identity() || other.is_identity() {
            return true;
        }
        let r = self.primitive_root().expect("nontrivial").root;
        let s = other.primitive_root().expect("nontrivial").root;
        s == r || s == r.inverse()
    }

    /// The centralizer of a nontrivial element: the maximal cyclic subgroup
    /// containing it.
    pub fn centralizer(&self) -> Result<CyclicSubgroup> {
        if self.is_identity() {
            return Err(Error::WholeGroup);
        }
        let root = self.primitive_root()?.root;
        Ok(CyclicSubgroup::from_primitive(root))
    }

    /// Letters occurring in the reduced form.
    pub fn support(&self) -> BTreeSet<u32> {
        self.0.iter().map(|l| l.letter).collect()
    }

    /// Left-to-right comparison under the canonical letter order.
    pub fn cmp_lex(&self, other: &Word) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Shortlex: shorter words first, equal lengths compared lexicographically.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.letter == VARIABLE {
                f.write_str("x")?;
            } else {
                write!(f, "g{}", l.letter)?;
            }
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub conjugator: Word,
    pub core: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: u64,
}

/// A maximal cyclic subgroup `⟨r⟩`, stored by its orientation-canonical
/// primitive generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicSubgroup {
    generator: Word,
}

impl CyclicSubgroup {
    pub(crate) fn from_primitive(root: Word) -> Self {
        CyclicSubgroup {
            generator: orient(root),
        }
    }

    pub fn generator(&self) -> &Word {
        &self.generator
    }

    pub fn contains(&self, g: &Word) -> bool {
        g.power_of(&self.generator).is_some()
    }
}

/// The lexicographically smaller of `r` and `r⁻¹`.
pub fn orient(r: Word) -> Word {
    let inv = r.inverse();
    if inv.cmp_lex(&r) == Ordering::Less {
        inv
    } else {
        r
    }
}

/// All reduced words of length at most `radius` over `rank` generators, in
/// shortlex order. A ball is therefore a prefix of every larger ball.
pub fn enumerate_ball(rank: usize, radius: usize) -> Vec<Word> {
    let rank = rank as u32;
    let mut out = vec![Word::identity()];
    let mut frontier_start = 0;
    for _ in 0..radius {
        let frontier_end = out.len();
        for i in frontier_start..frontier_end {
            let last = out[i].last();
            for letter in 0..rank {
                for l in [SignedLetter::pos(letter), SignedLetter::neg(letter)] {
                    if last.is_some_and(|t| t.cancels(l)) {
                        continue;
                    }
                    let mut v = out[i].0.clone();
                    v.push(l);
                    out.push(Word(v));
                }
            }
        }
        frontier_start = frontier_end;
    }
    out
}

/// Number of reduced words of length ≤ `radius` over `rank ≥ 1` generators.
pub fn ball_size(rank: usize, radius: usize) -> usize {
    let k = 2 * rank;
    let mut total = 1;
    let mut sphere = k;
    for _ in 0..radius {
        total += sphere;
        sphere *= k - 1;
    }
    total
}

/// An ordered finite set of generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n == "e" || n == "1" {
                return Err(Error::ReservedSymbol(n.clone()));
            }
            if !is_identifier(n) {
                return Err(Error::InvalidLetterName(n.clone()));
            }
            if index.insert(n.clone(), i as u32).is_some() {
                return Err(Error::DuplicateLetter(n.clone()));
            }
        }
        Ok(Alphabet { names, index })
    }

    /// Parses a comma-separated list such as `a,b,c`.
    pub fn parse_list(text: &str) -> Result<Self> {
        Alphabet::new(text.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: u32) -> &str {
        &self.names[letter as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn ball(&self, radius: usize) -> Vec<Word> {
        enumerate_ball(self.rank(), radius)
    }

    /// Parses text in the word grammar, e.g. `a b^-1 a^3`.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let letters = parse_terms(text, |ident| {
            self.lookup(ident)
                .ok_or_else(|| Error::UnknownLetter(ident.to_string()))
        })?;
        Ok(Word::reduce(letters))
    }

    pub fn format(&self, w: &Word) -> String {
        format_letters(w.letters(), |l| self.name(l).to_string())
    }
}

/// Shared term parser for plain and one-variable words.
pub(crate) fn parse_terms(
    text: &str,
    mut resolve: impl FnMut(&str) -> Result<u32>,
) -> Result<Vec<SignedLetter>> {
    let mut out = Vec::new();
    let mut seen_term = false;
    for term in text.split_whitespace() {
        seen_term = true;
        if term == "1" || term == "e" {
            continue;
        }
        let (ident, exp) = match term.split_once('^') {
            Some((i, e)) => {
                let k: i64 = e
                    .parse()
                    .map_err(|_| Error::MalformedExponent(term.to_string()))?;
                if k == 0 || k.abs() > MAX_EXPONENT {
                    return Err(Error::MalformedExponent(term.to_string()));
                }
                (i, k)
            }
            None => (term, 1),
        };
        if ident == "1" || ident == "e" {
            return Err(Error::ReservedSymbol(ident.to_string()));
        }
        if !is_identifier(ident) {
            return Err(Error::Syntax(term.to_string()));
        }
        let letter = resolve(ident)?;
        let l = if exp < 0 {
            SignedLetter::neg(letter)
        } else {
            SignedLetter::pos(letter)
        };
        out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
    }
    if !seen_term {
        return Err(Error::Syntax(
            "empty word (write 1 for the identity)".into(),
        ));
    }
    Ok(out)
}

/// Prints runs of one signed letter as a single power term.
pub(crate) fn format_letters(letters: &[SignedLetter], name: impl Fn(u32) -> String) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    let mut terms = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let run = (j - i) as i64;
        let exp = if l.inverse { -run } else { run };
        let n = name(l.letter);
        terms.push(if exp == 1 { n } else { format!("{n}^{exp}") });
        i = j;
    }
    terms.join(" ")
}
