//! Solution sets `E_w = { g : w(g) = e }` of one-variable equations.
//!
//! The pipeline enumerates solutions in a ball, proposes the cyclic line
//! through every pair of them, and keeps a line as a coset only when the
//! parametric word along it vanishes identically. Every emitted component is
//! therefore a genuine solution set; completeness is only claimed up to the
//! radius at which the result was checked against plain enumeration.

use std::collections::BTreeSet;

use crate::algset::{AlgebraicSet, ClosedSet, CyclicCoset};
use crate::error::{Error, Result};
use crate::onevar::OneVarWord;
use crate::onevar::{brute_solutions_in, reduce_parametric, substitute_line, LineSolutionSet};
use crate::par::{self, Exec};
use crate::word::{Alphabet, Word};

/// Upper bound on distinct coset hypotheses per discovery round.
pub const MAX_HYPOTHESES: usize = 5000;

/// Number of times discovery may be widened after a failed check.
pub const MAX_ESCALATIONS: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub discovery_radius: usize,
    pub verify_radius: usize,
    pub escalate: bool,
    pub exec: Exec,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig::with_discovery(6)
    }
}

impl SolveConfig {
    pub fn with_discovery(radius: usize) -> Self {
        SolveConfig {
            discovery_radius: radius,
            verify_radius: radius + 2,
            escalate: true,
            exec: Exec::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.verify_radius < self.discovery_radius {
            return Err(Error::Config(format!(
                "verify radius {} is smaller than discovery radius {}",
                self.verify_radius, self.discovery_radius
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub result: ClosedSet,
    /// The result agrees with enumeration on the ball of this radius.
    pub complete_on_radius: usize,
    /// Discovery radius of the final round.
    pub discovery_radius: usize,
    pub escalations: u32,
    /// Number of distinct cyclic lines tested in the final round.
    pub hypotheses: usize,
    /// Every point was checked by evaluation and every coset by parametric
    /// reduction.
    pub sound: bool,
}

pub fn solve(w: &OneVarWord, alphabet: &Alphabet, cfg: &SolveConfig) -> Result<SolveReport> {
    cfg.validate()?;
    if let Some(c) = w.as_constant() {
        let result = if c.is_identity() {
            ClosedSet::WholeGroup
        } else {
            ClosedSet::Set(AlgebraicSet::empty())
        };
        return Ok(SolveReport {
            result,
            complete_on_radius: cfg.verify_radius,
            discovery_radius: cfg.discovery_radius,
            escalations: 0,
            hypotheses: 0,
            sound: true,
        });
    }

    let mut discovery = cfg.discovery_radius;
    let mut verify = cfg.verify_radius;
    let mut escalations = 0;
    loop {
        let ball = alphabet.ball(verify);
        let expected = brute_solutions_in(w, &ball, cfg.exec);
        let found: Vec<Word> = expected
            .iter()
            .take_while(|g| g.len() <= discovery)
            .cloned()
            .collect();
        let lines = hypotheses(&found, cfg.exec)?;
        let (set, sound) = assemble(w, found, &lines, cfg.exec)?;

        let got = set.restrict_to_ball(verify);
        let expected: BTreeSet<Word> = expected.into_iter().collect();
        if got == expected {
            return Ok(SolveReport {
                result: ClosedSet::Set(set),
                complete_on_radius: verify,
                discovery_radius: discovery,
                escalations,
                hypotheses: lines.len(),
                sound,
            });
        }
        if !cfg.escalate || escalations >= MAX_ESCALATIONS {
            return Err(Error::EscalationExhausted {
                escalations,
                radius: verify,
                missing: expected.difference(&got).count(),
                extra: got.difference(&expected).count(),
            });
        }
        escalations += 1;
        discovery += 2;
        verify = verify.max(discovery);
    }
}

/// Distinct canonical lines `g⟨root(g⁻¹h)⟩` through pairs of discovered
/// solutions.
fn hypotheses(found: &[Word], exec: Exec) -> Result<Vec<CyclicCoset>> {
    let idx: Vec<usize> = (0..found.len()).collect();
    let per_point = par::map(exec, &idx, |&i| {
        let g = &found[i];
        let g_inv = g.inverse();
        let mut lines = BTreeSet::new();
        for h in &found[i + 1..] {
            // every line in `lines` passes through g
            if lines.iter().any(|c: &CyclicCoset| c.contains(h)) {
                continue;
            }
            let root = g_inv
                .multiply(h)
                .primitive_root()
                .expect("distinct points")
                .root;
            lines.insert(CyclicCoset::new(g.clone(), root).expect("primitive root"));
        }
        lines
    });
    let mut all = BTreeSet::new();
    for lines in per_point {
        all.extend(lines);
        if all.len() > MAX_HYPOTHESES {
            return Err(Error::OversizeDiscovery {
                lines: all.len(),
                limit: MAX_HYPOTHESES,
            });
        }
    }
    Ok(all.into_iter().collect())
}

enum LineVerdict {
    Coset(CyclicCoset),
    Points(Vec<Word>),
}

fn assemble(
    w: &OneVarWord,
    found: Vec<Word>,
    lines: &[CyclicCoset],
    exec: Exec,
) -> Result<(AlgebraicSet, bool)> {
    let verdicts = par::map(exec, lines, |c| -> Result<LineVerdict> {
        let pw = substitute_line(w, c.rep(), c.root())?;
        Ok(match reduce_parametric(&pw) {
            LineSolutionSet::AllIntegers => LineVerdict::Coset(c.clone()),
            LineSolutionSet::Finite(ns) => {
                LineVerdict::Points(ns.into_iter().map(|n| c.element(n)).collect())
            }
        })
    });
    let mut points = found;
    let mut cosets = Vec::new();
    for v in verdicts {
        match v? {
            LineVerdict::Coset(c) => cosets.push(c),
            LineVerdict::Points(ps) => points.extend(ps),
        }
    }
    let set = AlgebraicSet::from_parts(points, cosets);
    let sound = set.points().iter().all(|p| w.is_solution(p))
        && set.cosets().iter().all(|c| {
            substitute_line(w, c.rep(), c.root())
                .map(|pw| reduce_parametric(&pw) == LineSolutionSet::AllIntegers)
                .unwrap_or(false)
        });
    Ok((set, sound))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub matches: bool,
    /// Solutions in the ball that the set misses.
    pub missing: Vec<Word>,
    /// Members of the set in the ball that are not solutions.
    pub extra: Vec<Word>,
    pub checked: usize,
}

/// Compares membership pointwise with evaluation over the whole ball.
pub fn verify_against_oracle(
    w: &OneVarWord,
    set: &ClosedSet,
    alphabet: &Alphabet,
    radius: usize,
) -> OracleReport {
    verify_on_ball(w, set, &alphabet.ball(radius), Exec::default())
}

pub fn verify_on_ball(w: &OneVarWord, set: &ClosedSet, ball: &[Word], exec: Exec) -> OracleReport {
    let verdicts = par::map(exec, ball, |g| (set.contains(g), w.is_solution(g)));
    let mut missing = Vec::new();
    let mut extra = Vec::new();
    for (g, (member, solves)) in ball.iter().zip(verdicts) {
        match (member, solves) {
            (false, true) => missing.push(g.clone()),
            (true, false) => extra.push(g.clone()),
            _ => {}
        }
    }
    OracleReport {
        matches: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
        checked: ball.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn w(text: &str) -> Word {
        ab().parse(text).unwrap()
    }

    fn v(text: &str) -> OneVarWord {
        OneVarWord::parse(&ab(), "x", text).unwrap()
    }

    fn solved(text: &str) -> AlgebraicSet {
        let r = solve(&v(text), &ab(), &SolveConfig::default()).unwrap();
        assert!(r.sound);
        r.result.as_set().expect("proper").clone()
    }

    #[test]
    fn commutator_with_a() {
        let s = solved("x a x^-1 a^-1");
        assert_eq!(
            s,
            AlgebraicSet::from_coset(CyclicCoset::subgroup(w("a")).unwrap())
        );
    }

    #[test]
    fn unique_solution() {
        assert_eq!(solved("x a^-1"), AlgebraicSet::from_point(w("a")));
    }

    #[test]
    fn conjugated_centralizer() {
        let s = solved("x b a b^-1 x^-1 a^-1");
        let c = CyclicCoset::new(w("b^-1"), w("b a b^-1")).unwrap();
        assert_eq!(s, AlgebraicSet::from_coset(c.clone()));
        assert_eq!((c.rep(), c.root()), (&w("b^-1"), &w("b a b^-1")));
    }

    #[test]
    fn no_square_root() {
        assert!(solved("x^2 a").is_empty());
    }

    #[test]
    fn constant_words() {
        let r = solve(&v("a a^-1"), &ab(), &SolveConfig::default()).unwrap();
        assert_eq!(r.result, ClosedSet::WholeGroup);
        let r = solve(&v("a b"), &ab(), &SolveConfig::default()).unwrap();
        assert_eq!(r.result, ClosedSet::Set(AlgebraicSet::empty()));
    }

    #[test]
    fn escalation_finds_long_isolated_solution() {
        // the only solution has length 7 > discovery radius 6
        let r = solve(&v("x a b a b a b a"), &ab(), &SolveConfig::default()).unwrap();
        assert_eq!(
            r.result,
            ClosedSet::Set(AlgebraicSet::from_point(w(
                "a^-1 b^-1 a^-1 b^-1 a^-1 b^-1 a^-1"
            )))
        );
        assert_eq!(r.escalations, 1);
        assert!(r.complete_on_radius >= 8);
    }

    #[test]
    fn no_escalation_reports_mismatch() {
        let cfg = SolveConfig {
            escalate: false,
            ..SolveConfig::with_discovery(2)
        };
        let err = solve(&v("x a b a"), &ab(), &cfg).unwrap_err();
        assert!(matches!(
            err,
            Error::EscalationExhausted {
                missing: 1,
                extra: 0,
                ..
            }
        ));
    }

    #[test]
    fn bad_config() {
        let cfg = SolveConfig {
            verify_radius: 1,
            ..SolveConfig::default()
        };
        assert!(matches!(solve(&v("x"), &ab(), &cfg), Err(Error::Config(_))));
    }

    #[test]
    fn oracle_examples() {
        let alphabet = ab();
        let sub_a = ClosedSet::Set(AlgebraicSet::from_coset(
            CyclicCoset::subgroup(w("a")).unwrap(),
        ));
        assert!(verify_against_oracle(&v("x a x^-1 a^-1"), &sub_a, &alphabet, 4).matches);
        let pt = ClosedSet::Set(AlgebraicSet::from_point(w("a")));
        assert!(verify_against_oracle(&v("x a^-1"), &pt, &alphabet, 4).matches);
        let e = ClosedSet::Set(AlgebraicSet::from_point(Word::identity()));
        let r = verify_against_oracle(&v("x a x^-1 a^-1"), &e, &alphabet, 2);
        assert!(!r.matches);
        assert!(r.missing.contains(&w("a")));
        assert!(r.extra.is_empty());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let w = v("x b x a x^-1 b^-1 x^-1");
        let seq = SolveConfig {
            exec: Exec::Sequential,
            ..SolveConfig::default()
        };
        let par = SolveConfig {
            exec: Exec::Parallel,
            ..SolveConfig::default()
        };
        assert_eq!(
            solve(&w, &ab(), &seq).unwrap(),
            solve(&w, &ab(), &par).unwrap()
        );
    }
}
