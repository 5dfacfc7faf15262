use std::fmt;
use std::thread;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{OutputFormat, RunConfig};
use crate::error::Result;
use crate::hopf::check_bialgebra;
use crate::kernel::{check_hoffman_axioms, format_coeff, words_up_to_length, Alphabet, Coeff, Element, Letter, Word};
use crate::products::{mixable_shuffle_explicit, mixable_shuffle_recursive, shuffle_explicit, shuffle_recursive, Product};
use crate::rota_baxter::{check_rota_baxter, p_a, p_v};
use crate::structure::{
    check_linear_disjointness, check_linear_independence, check_one_shuffled_span, check_quasi_shuffle_isomorphism,
    check_rescaling, check_unit_power_lemma, unit_power_family, IndexSequence, Window,
};

/// Rota-Baxter sample pairs beyond this count are subsampled with the seed.
const MAX_RB_SAMPLES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl CheckLine {
    fn new(name: &str, params: String, witness: Option<String>) -> Self {
        CheckLine {
            name: name.to_string(),
            params,
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub header: String,
    pub lines: Vec<CheckLine>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.status == Status::Fail).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn line(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let count = |s| self.lines.iter().filter(|l| l.status == s).count();
        let summary = format!(
            "{} passed, {} failed, {} skipped",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skip)
        );
        let mut out = String::new();
        match format {
            OutputFormat::Quiet => {}
            OutputFormat::Canonical => {
                out += &format!("# {}\n", self.header);
                let width = self.lines.iter().map(|l| l.name.len()).max().unwrap_or(0);
                for l in &self.lines {
                    out += &format!("{:<width$}  {}  {}", l.name, l.params, l.status);
                    if let Some(w) = &l.witness {
                        out += &format!("  witness: {w}");
                    }
                    out.push('\n');
                }
                out += &format!("# {summary}\n");
            }
            OutputFormat::Tabular => {
                out += "check\tparams\tresult\twitness\n";
                for l in &self.lines {
                    out += &format!("{}\t{}\t{}\t{}\n", l.name, l.params, l.status, l.witness.as_deref().unwrap_or("-"));
                }
            }
        }
        out
    }
}

/// `y_1, ..., y_k`, fewer when the alphabet is smaller.
fn first_letters(alphabet: &Alphabet, k: usize) -> Vec<Letter> {
    (1..=k).map_while(|i| alphabet.nth_letter(i).ok()).collect()
}

fn word_pairs(words: &[Word], max_total: usize, nonempty: bool) -> Vec<(Element, Element)> {
    let mut out = Vec::new();
    for a in words {
        for b in words {
            if a.len() + b.len() <= max_total && !(nonempty && (a.is_empty() || b.is_empty())) {
                out.push((Element::word(a.clone()), Element::word(b.clone())));
            }
        }
    }
    out
}

fn subsample<T>(mut items: Vec<T>, seed: u64) -> Vec<T> {
    if items.len() > MAX_RB_SAMPLES {
        items.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        items.truncate(MAX_RB_SAMPLES);
    }
    items
}

fn q(c: &Coeff) -> String {
    format_coeff(c)
}

type Group<'a> = Box<dyn FnOnce() -> Result<Vec<CheckLine>> + Send + 'a>;

/// Runs every checker at the configured bounds. Check groups run on separate
/// threads; the report order is fixed.
pub fn run_verification_suite(config: &RunConfig) -> Result<VerificationReport> {
    config.validate()?;
    let alphabet = config.alphabet.load()?;
    let a = &alphabet;
    let lam = &config.lambda;
    let (deg, len) = (config.max_degree, config.max_length);
    let two = first_letters(a, 2);
    let mut with_unit = vec![Letter::unit()];
    with_unit.extend(two.iter().cloned());
    let window = Window {
        max_units: len.min(3),
        max_index_len: len.min(2),
        letters: two.len(),
    };

    let mut groups: Vec<(&str, Group)> = Vec::new();

    groups.push((
        "hoffman",
        Box::new(move || {
            let report = check_hoffman_axioms(a, deg);
            Ok(report
                .outcomes
                .iter()
                .map(|o| {
                    let witness = (!o.passed).then(|| {
                        o.witness.iter().map(Letter::to_string).collect::<Vec<_>>().join(",")
                    });
                    CheckLine::new("hoffman", format!("axiom={} degree<={deg}", o.axiom), witness)
                })
                .collect())
        }),
    ));

    let sh_words = words_up_to_length(&two, len);
    groups.push((
        "shuffle-oracle",
        Box::new(move || {
            let pairs = word_pairs(&sh_words, len, false);
            let witness = pairs.iter().find_map(|(x, y)| {
                let (u, v) = (x.words().next().unwrap(), y.words().next().unwrap());
                (shuffle_explicit(u, v) != shuffle_recursive(u, v)).then(|| format!("{u} {v}"))
            });
            Ok(vec![CheckLine::new(
                "shuffle-oracle",
                format!("letters=2 total-length<={len} cases={}", pairs.len()),
                witness,
            )])
        }),
    ));

    let mix_words = words_up_to_length(&with_unit, len);
    groups.push((
        "mixable-oracle",
        Box::new(move || {
            let pairs = word_pairs(&mix_words, len, false);
            let mut witness = None;
            for (x, y) in &pairs {
                let (u, v) = (x.words().next().unwrap(), y.words().next().unwrap());
                if mixable_shuffle_explicit(u, v, lam, a)? != mixable_shuffle_recursive(u, v, lam, a)? {
                    witness = Some(format!("{u} {v}"));
                    break;
                }
            }
            Ok(vec![CheckLine::new(
                "mixable-oracle",
                format!("letters=1+2 total-length<={len} lambda={} cases={}", q(lam), pairs.len()),
                witness,
            )])
        }),
    ));

    let iso_letters = a.letters_up_to(deg);
    let two_iso = two.clone();
    groups.push((
        "quasi-shuffle-iso",
        Box::new(move || {
            let iso = check_quasi_shuffle_isomorphism(a, &iso_letters, len)?;
            let resc = check_rescaling(a, &two_iso, len, lam)?;
            Ok(vec![
                CheckLine::new(
                    "quasi-shuffle-iso",
                    format!("letters<=deg{deg} total-length<={len} cases={}", iso.cases),
                    iso.witness,
                ),
                CheckLine::new(
                    "rescaling",
                    format!("letters=2 total-length<={len} lambda={} cases={}", q(lam), resc.cases),
                    resc.witness,
                ),
            ])
        }),
    ));

    let rb_words = words_up_to_length(&with_unit, len);
    let seed = config.seed;
    groups.push((
        "rota-baxter",
        Box::new(move || {
            let samples = subsample(word_pairs(&rb_words, len, true), seed);
            let report = check_rota_baxter(p_a, |x, y| crate::products::augmented_product(x, y, lam, a), lam, &samples)?;
            let witness = report.first_failure().map(|t| format!("{} {}", t.x, t.y));
            Ok(vec![CheckLine::new(
                "rota-baxter",
                format!("operator=P_A product=aug lambda={} total-length<={len} cases={}", q(lam), samples.len()),
                witness,
            )])
        }),
    ));

    let tv_words = words_up_to_length(&two, len);
    let v = two.first().cloned();
    let negative = config.negative_control;
    groups.push((
        "rota-baxter-tensor",
        Box::new(move || {
            let Some(v) = v else {
                return Ok(vec![CheckLine {
                    name: "rota-baxter-tensor".into(),
                    params: "operator=P_v".into(),
                    status: Status::Skip,
                    witness: None,
                }]);
            };
            let samples = subsample(word_pairs(&tv_words, len, false), seed);
            let sh = |x: &Element, y: &Element| x.bilinear(y, |u, w| Ok(shuffle_recursive(u, w)));
            let zero = Coeff::from_integer(0.into());
            let report = check_rota_baxter(|e| p_v(&v, e), sh, &zero, &samples)?;
            let witness = report.first_failure().map(|t| format!("{} {}", t.x, t.y));
            let params = |w: &Coeff| format!("operator=P_{v} product=sh weight={} total-length<={len} cases={}", q(w), samples.len());
            let mut lines = vec![CheckLine::new("rota-baxter-tensor", params(&zero), witness)];
            if negative {
                let report = check_rota_baxter(|e| p_v(&v, e), sh, lam, &samples)?;
                let witness = report.first_failure().map(|t| format!("{} {}", t.x, t.y));
                lines.push(CheckLine::new("negative-control", params(lam), witness));
            }
            Ok(lines)
        }),
    ));

    for (name, product) in [("bialgebra-qsh", Product::QuasiShuffle), ("bialgebra-msh", Product::Mixable(lam.clone()))] {
        groups.push((
            name,
            Box::new(move || {
                let report = check_bialgebra(&product, a, deg)?;
                Ok(report
                    .checks
                    .iter()
                    .map(|c| {
                        CheckLine::new(
                            name,
                            format!("product={product} axiom={} degree<={deg} cases={}", c.name, c.cases),
                            c.witness.clone(),
                        )
                    })
                    .collect())
            }),
        ));
    }

    let lemma_letters = two.len();
    groups.push((
        "unit-power-lemma",
        Box::new(move || {
            let r = check_unit_power_lemma(a, len, len.min(3), lemma_letters, lam)?;
            Ok(vec![CheckLine::new(
                "unit-power-lemma",
                format!("m<={len} len<={} letters={lemma_letters} lambda={} cases={}", len.min(3), q(lam), r.cases),
                r.witness,
            )])
        }),
    ));

    groups.push((
        "independence",
        Box::new(move || {
            let index = IndexSequence::new(if window.letters >= 2 { vec![1, 2] } else { vec![1, 1] });
            let family = unit_power_family(&index, len, lam, a)?;
            let r = check_linear_independence(&family)?;
            let witness = (!r.independent()).then(|| format!("rank {} of {} dependency {:?}", r.rank, r.inputs, r.dependency));
            let mut lines = vec![CheckLine::new(
                "independence",
                format!("I={index} n<={len} lambda={} rank={}/{}", q(lam), r.rank, r.inputs),
                witness,
            )];
            let r = check_linear_disjointness(a, lam, &window)?;
            let witness = (!r.independent()).then(|| format!("rank {} of {}", r.rank, r.inputs));
            lines.push(CheckLine::new(
                "disjointness",
                format!("{window} lambda={} rank={}/{}", q(lam), r.rank, r.inputs),
                witness,
            ));
            let r = check_one_shuffled_span(a, lam, &window)?;
            lines.push(CheckLine::new(
                "one-shuffled-span",
                format!("{window} lambda={} direction=products-in-span cases={}", q(lam), r.forward.checked),
                r.forward.witness.map(|w| w.to_string()),
            ));
            lines.push(CheckLine::new(
                "one-shuffled-span",
                format!("{window} lambda={} direction=one-shuffled-in-span cases={}", q(lam), r.backward.checked),
                r.backward.witness.map(|w| w.to_string()),
            ));
            Ok(lines)
        }),
    ));

    let results: Vec<(&str, Result<Vec<CheckLine>>)> = thread::scope(|s| {
        let handles: Vec<_> = groups
            .into_iter()
            .map(|(name, g)| (name, s.spawn(g)))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| (name, h.join().expect("check thread panicked")))
            .collect()
    });

    let mut lines = Vec::new();
    for (name, result) in results {
        match result {
            Ok(mut ls) => lines.append(&mut ls),
            Err(e) => lines.push(CheckLine::new(name, "error".into(), Some(e.to_string()))),
        }
    }
    Ok(VerificationReport {
        header: config.describe(),
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;
    use crate::shell::AlphabetSource;

    fn small() -> RunConfig {
        RunConfig {
            max_degree: 3,
            max_length: 3,
            ..RunConfig::default()
        }
    }

    #[test]
    fn small_suite_passes() {
        let r = run_verification_suite(&small()).unwrap();
        assert!(r.all_passed(), "{}", r.render(OutputFormat::Canonical));
        assert_eq!(r.exit_code(), 0);
        assert!(r.line("rota-baxter").is_some());
    }

    #[test]
    fn negative_control_fails_row() {
        let cfg = RunConfig {
            negative_control: true,
            lambda: int(2),
            ..small()
        };
        let r = run_verification_suite(&cfg).unwrap();
        assert_eq!(r.line("negative-control").unwrap().status, Status::Fail);
        assert_eq!(r.failures(), 1);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn config_errors() {
        let cfg = RunConfig {
            alphabet: AlphabetSource::File("/nonexistent/pairing".into()),
            ..small()
        };
        assert!(run_verification_suite(&cfg).is_err());
        let cfg = RunConfig { max_degree: 0, ..small() };
        assert!(run_verification_suite(&cfg).is_err());
    }

    #[test]
    fn zero_alphabet_suite() {
        let cfg = RunConfig {
            alphabet: AlphabetSource::Zero,
            lambda: int(-1),
            ..small()
        };
        let r = run_verification_suite(&cfg).unwrap();
        assert!(r.all_passed(), "{}", r.render(OutputFormat::Canonical));
    }
}
