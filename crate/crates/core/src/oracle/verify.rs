//! Corpus-wide evaluation of every cross-check, in parallel, with a
//! deterministic merge.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use super::canon::is_isomorphic;
use super::vertices::full_proper_exists;
use crate::classify::{classify, ClassifyOptions, Outcome};
use crate::events::EventSet;
use crate::poset::InvolutivePoset;
use crate::states::{embed, is_state, synthesize_full_proper, Synthesis};

/// Posets up to this size are also decided by vertex enumeration.
pub const VERTEX_ORACLE_MAX: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Fixture(String),
    Enumerated(usize),
    Random {
        states: usize,
        pairs: usize,
        denominator: u32,
        seed: u64,
    },
    File(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Fixture(name) => write!(f, "fixture {name}"),
            Provenance::Enumerated(i) => write!(f, "enumerated #{i}"),
            Provenance::Random {
                states,
                pairs,
                denominator,
                seed,
            } => write!(f, "random({states},{pairs},{denominator},{seed})"),
            Provenance::File(path) => write!(f, "file {path}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Instance {
    Gse(EventSet),
    Poset(InvolutivePoset),
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub instances: Vec<(Provenance, Instance)>,
}

impl Corpus {
    pub fn push_gse(&mut self, provenance: Provenance, g: EventSet) {
        self.instances.push((provenance, Instance::Gse(g)));
    }

    pub fn push_poset(&mut self, provenance: Provenance, p: InvolutivePoset) {
        self.instances.push((provenance, Instance::Poset(p)));
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub vacuous: usize,
    pub inconclusive: usize,
    pub violations: Vec<String>,
}

impl Tally {
    pub fn applicable(&self) -> usize {
        self.pass + self.violations.len() + self.inconclusive
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub instances: usize,
    pub checks: BTreeMap<String, Tally>,
}

impl VerificationReport {
    pub fn violation_count(&self) -> usize {
        self.checks.values().map(|t| t.violations.len()).sum()
    }

    pub fn inconclusive_count(&self) -> usize {
        self.checks.values().map(|t| t.inconclusive).sum()
    }

    pub fn exit_code(&self) -> i32 {
        if self.violation_count() > 0 {
            2
        } else if self.inconclusive_count() > 0 {
            3
        } else {
            0
        }
    }

    pub fn machine(&self) -> String {
        let mut entries: BTreeMap<String, String> = BTreeMap::new();
        entries.insert("instances".into(), self.instances.to_string());
        entries.insert("violations".into(), self.violation_count().to_string());
        entries.insert("inconclusive".into(), self.inconclusive_count().to_string());
        for (name, t) in &self.checks {
            entries.insert(format!("check.{name}.pass"), t.pass.to_string());
            entries.insert(format!("check.{name}.vacuous"), t.vacuous.to_string());
            entries.insert(
                format!("check.{name}.inconclusive"),
                t.inconclusive.to_string(),
            );
            entries.insert(
                format!("check.{name}.violations"),
                t.violations.len().to_string(),
            );
            for (i, v) in t.violations.iter().enumerate() {
                entries.insert(format!("check.{name}.violation.{i}"), v.clone());
            }
        }
        let mut out = String::new();
        for (k, v) in entries {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} instances, {} violations, {} inconclusive",
            self.instances,
            self.violation_count(),
            self.inconclusive_count()
        );
        for (name, t) in &self.checks {
            let _ = writeln!(
                out,
                "  {name:<42} pass {:>5}  vacuous {:>5}  inconclusive {:>3}  violations {}",
                t.pass,
                t.vacuous,
                t.inconclusive,
                t.violations.len()
            );
            for v in &t.violations {
                let _ = writeln!(out, "    {v}");
            }
        }
        out
    }
}

type Results = Vec<(String, Outcome)>;

fn poset_checks(p: &InvolutivePoset, out: &mut Results) {
    let mut de_morgan = Outcome::Pass;
    for x in p.elements() {
        for y in p.elements() {
            if let Some(j) = p.join(x, y) {
                if p.meet(p.prime(x), p.prime(y)) != Some(p.prime(j)) {
                    de_morgan = Outcome::Fail(format!("{}, {}", p.label(x), p.label(y)));
                }
            }
        }
    }
    out.push(("poset_de_morgan".into(), de_morgan));
    let again = InvolutivePoset::from_relation(
        p.labels().to_vec(),
        p.relation().to_vec(),
        p.prime_map().to_vec(),
    );
    out.push((
        "poset_revalidation_identity".into(),
        if again.as_ref() == Ok(p) {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("{again:?}"))
        },
    ));
    let from_covers = InvolutivePoset::from_generators(
        p.labels().to_vec(),
        &p.covers(),
        p.prime_map().iter().copied().map(Some).collect(),
    );
    out.push((
        "poset_cover_closure".into(),
        match from_covers {
            Ok(q) if q.relation() == p.relation() => Outcome::Pass,
            other => Outcome::Fail(format!("{other:?}")),
        },
    ));
}

fn state_checks(p: &InvolutivePoset, out: &mut Results) {
    let synthesis = synthesize_full_proper(p);
    let oracle = (p.len() <= VERTEX_ORACLE_MAX).then(|| full_proper_exists(p));
    let (round_trip, exact, agreement) = match synthesis {
        Err(e) => {
            let f = Outcome::Fail(e.to_string());
            (f.clone(), f.clone(), f)
        }
        Ok(Synthesis::Impossible { reason, .. }) => {
            let agreement = match oracle {
                None => Outcome::Vacuous,
                Some(false) => Outcome::Pass,
                Some(true) => {
                    Outcome::Fail(format!("solver says {reason:?}, vertices say possible"))
                }
            };
            (Outcome::Vacuous, Outcome::Vacuous, agreement)
        }
        Ok(Synthesis::Found { states, .. }) => {
            let exact = if states.members.iter().all(|m| is_state(p, &m.values)) {
                Outcome::Pass
            } else {
                Outcome::Fail("witness violates a state constraint".into())
            };
            let round_trip = match embed(p, &states) {
                Ok(e) => {
                    let proper = e.gse.all_proper().holds();
                    if proper && is_isomorphic(e.gse.poset(), p) {
                        Outcome::Pass
                    } else {
                        Outcome::Fail(format!("proper={proper}, induced poset not isomorphic"))
                    }
                }
                Err(e) => Outcome::Fail(e.to_string()),
            };
            let agreement = match oracle {
                None => Outcome::Vacuous,
                Some(true) => Outcome::Pass,
                Some(false) => Outcome::Fail("solver found states, vertices say impossible".into()),
            };
            (round_trip, exact, agreement)
        }
    };
    out.push(("states_round_trip".into(), round_trip));
    out.push(("states_exact_witnesses".into(), exact));
    out.push(("states_oracle_agreement".into(), agreement));
}

fn instance_checks(instance: &Instance, opts: ClassifyOptions) -> Results {
    let mut out = Vec::new();
    match instance {
        Instance::Gse(g) => {
            let r = classify(g, opts);
            for (name, outcome) in r.consistency {
                out.push((name.to_string(), outcome));
            }
            poset_checks(g.poset(), &mut out);
        }
        Instance::Poset(p) => {
            poset_checks(p, &mut out);
            state_checks(p, &mut out);
        }
    }
    out
}

/// Evaluates every applicable check on every instance.
pub fn verify_theorems(corpus: &Corpus, opts: ClassifyOptions) -> VerificationReport {
    let results: Vec<Results> = corpus
        .instances
        .par_iter()
        .map(|(_, inst)| instance_checks(inst, opts))
        .collect();
    let mut report = VerificationReport {
        instances: corpus.len(),
        checks: BTreeMap::new(),
    };
    for ((provenance, _), results) in corpus.instances.iter().zip(results) {
        for (name, outcome) in results {
            let t = report.checks.entry(name).or_default();
            match outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::Vacuous => t.vacuous += 1,
                Outcome::Inconclusive => t.inconclusive += 1,
                Outcome::Fail(msg) => t.violations.push(format!("{provenance}: {msg}")),
            }
        }
    }
    report
}
