//! Exhaustive check of the Hoffman pairing axioms on a degree window.

use std::fmt;

use super::alphabet::Alphabet;
use super::letter::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// Zero is absorbing.
    S0,
    /// Commutativity.
    S1,
    /// Associativity.
    S2,
    /// Nonzero brackets are degree-additive.
    S3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::S0 => "S0",
            Axiom::S1 => "S1",
            Axiom::S2 => "S2",
            Axiom::S3 => "S3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub passed: bool,
    /// Offending letters when `passed` is false.
    pub witness: Vec<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoffmanReport {
    pub degree_bound: u32,
    pub letters_checked: usize,
    pub outcomes: Vec<AxiomOutcome>,
}

impl HoffmanReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .expect("every axiom is reported")
    }
}

pub fn check_hoffman_axioms(alphabet: &Alphabet, degree_bound: u32) -> HoffmanReport {
    let letters = alphabet.letters_up_to(degree_bound);
    let br = |a: Option<&Letter>, b: Option<&Letter>| alphabet.bracket(a, b).unwrap_or(None);

    let s0 = letters
        .iter()
        .find(|a| br(Some(a), None).is_some() || br(None, Some(a)).is_some())
        .map(|a| vec![a.clone()]);

    let mut s1 = None;
    let mut s3 = None;
    for a in &letters {
        for b in &letters {
            let ab = br(Some(a), Some(b));
            if s1.is_none() && ab != br(Some(b), Some(a)) {
                s1 = Some(vec![a.clone(), b.clone()]);
            }
            if s3.is_none() {
                if let Some(c) = &ab {
                    if c.degree() != a.degree() + b.degree() {
                        s3 = Some(vec![a.clone(), b.clone()]);
                    }
                }
            }
        }
    }

    let mut s2 = None;
    'outer: for a in &letters {
        for b in &letters {
            let ab = br(Some(a), Some(b));
            for c in &letters {
                let left = br(ab.as_ref(), Some(c));
                let bc = br(Some(b), Some(c));
                let right = br(Some(a), bc.as_ref());
                if left != right {
                    s2 = Some(vec![a.clone(), b.clone(), c.clone()]);
                    break 'outer;
                }
            }
        }
    }

    let outcome = |axiom, w: Option<Vec<Letter>>| AxiomOutcome {
        axiom,
        passed: w.is_none(),
        witness: w.unwrap_or_default(),
    };
    HoffmanReport {
        degree_bound,
        letters_checked: letters.len(),
        outcomes: vec![
            outcome(Axiom::S0, s0),
            outcome(Axiom::S1, s1),
            outcome(Axiom::S2, s2),
            outcome(Axiom::S3, s3),
        ],
    }
}
