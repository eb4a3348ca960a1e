//! The full property vector of a GSE with witnesses, and the cross-checks
//! that the known implications and equivalences between those properties
//! actually hold on it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::checks::{
    self, check_orth_atom_sums_closed, check_prop3_condition, check_property_p, check_property_sj,
    check_property_t, check_property_u, check_sum_is_join, concrete_representation, is_ngfe,
    CheckError, SearchCap, SjBase, SjOrdering,
};
use crate::events::EventSet;
use crate::oracle::canon::is_isomorphic;
use crate::states::{embed, states_of_gse};
use crate::witness::{ElementWitnessPair, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flag {
    True,
    False(ElementWitnessPair),
    NotApplicable(String),
    Inconclusive(u64),
}

impl Flag {
    pub fn is_true(&self) -> bool {
        matches!(self, Flag::True)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Flag::False(_))
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Flag::True => "true",
            Flag::False(_) => "false",
            Flag::NotApplicable(_) => "n/a",
            Flag::Inconclusive(_) => "inconclusive",
        }
    }
}

impl From<Verdict> for Flag {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Holds => Flag::True,
            Verdict::Fails(w) => Flag::False(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The premise does not hold on this instance.
    Vacuous,
    Fail(String),
    Inconclusive,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Fail(_) => "fail",
            Outcome::Inconclusive => "inconclusive",
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

/// Flag names in report order. The `sj_*` readings are printed only in
/// verbose mode; `prop_SJ` is `sj_atoms_all`.
pub const FLAG_NAMES: &[&str] = &[
    "algebra",
    "all_proper",
    "axiom3",
    "axiom4",
    "boolean",
    "complemented",
    "concrete_representable",
    "concrete_valued",
    "gfe",
    "lattice",
    "ngfe",
    "orth_atom_sums_closed",
    "ortholattice",
    "orthomodular",
    "prop3_condition",
    "prop_P",
    "prop_SJ",
    "prop_T",
    "prop_U",
    "sj_atoms_all",
    "sj_atoms_some",
    "sj_elements_all",
    "sj_elements_some",
];

const VERBOSE_ONLY: &[&str] = &[
    "sj_atoms_all",
    "sj_atoms_some",
    "sj_elements_all",
    "sj_elements_some",
];

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    pub cap: SearchCap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub labels: Vec<String>,
    pub num_states: usize,
    /// Longest chain from 0 to 1, counted in covering steps.
    pub length: usize,
    pub flags: BTreeMap<&'static str, Flag>,
    pub consistency: BTreeMap<&'static str, Outcome>,
    pub notes: Vec<String>,
}

fn run(result: Result<Verdict, CheckError>, internal: &mut Vec<String>) -> Flag {
    match result {
        Ok(v) => v.into(),
        Err(CheckError::CapExceeded(c)) => Flag::Inconclusive(c),
        Err(CheckError::Precondition(p)) => Flag::NotApplicable(p.to_string()),
        Err(CheckError::Inconsistent(msg)) => {
            internal.push(msg.clone());
            Flag::NotApplicable(format!("internal inconsistency: {msg}"))
        }
    }
}

fn first_failure(verdicts: &[Verdict]) -> Flag {
    verdicts
        .iter()
        .find(|v| !v.holds())
        .cloned()
        .unwrap_or(Verdict::Holds)
        .into()
}

/// `premise ⇒ conclusion` over three-valued flags.
fn implies(premise: &Flag, conclusion: &Flag, what: &str) -> Outcome {
    match (premise, conclusion) {
        (Flag::Inconclusive(_), _) => Outcome::Inconclusive,
        (Flag::True, Flag::True) => Outcome::Pass,
        (Flag::True, Flag::Inconclusive(_)) => Outcome::Inconclusive,
        (Flag::True, _) => Outcome::Fail(what.to_string()),
        _ => Outcome::Vacuous,
    }
}

/// `premise ⇒ (a ⇔ b)`.
fn equivalent_under(premise: bool, a: &Flag, b: &Flag, what: &str) -> Outcome {
    if !premise {
        return Outcome::Vacuous;
    }
    match (a, b) {
        (Flag::Inconclusive(_), _) | (_, Flag::Inconclusive(_)) => Outcome::Inconclusive,
        (Flag::NotApplicable(_), _) | (_, Flag::NotApplicable(_)) => {
            Outcome::Fail(format!("{what}: a side is not applicable"))
        }
        _ if a.is_true() == b.is_true() => Outcome::Pass,
        _ => Outcome::Fail(format!("{what}: {} versus {}", a.as_str(), b.as_str())),
    }
}

pub fn classify(g: &EventSet, opts: ClassifyOptions) -> ClassificationReport {
    let poset = g.poset();
    let cap = opts.cap;
    let mut internal = Vec::new();
    let mut notes = Vec::new();
    let mut flags: BTreeMap<&'static str, Flag> = BTreeMap::new();

    let axiom3 = g.check_axiom3();
    let axiom4 = g.check_axiom4();
    let lattice = poset.is_lattice();
    let orthoposet = poset.is_orthoposet();
    flags.insert("axiom3", axiom3.clone().into());
    flags.insert("axiom4", axiom4.clone().into());
    flags.insert("gfe", axiom3.clone().into());
    flags.insert("algebra", g.is_algebra().into());
    flags.insert("ngfe", is_ngfe(g).into());
    flags.insert("complemented", g.is_complemented().into());
    flags.insert("all_proper", g.all_proper().into());
    flags.insert("concrete_valued", g.is_concrete_valued().into());
    flags.insert("lattice", lattice.clone().into());
    flags.insert(
        "ortholattice",
        first_failure(&[lattice.clone(), orthoposet.clone()]),
    );
    let orthomodular = if orthoposet.holds() {
        run(
            poset.is_orthomodular().map_err(CheckError::from),
            &mut internal,
        )
    } else {
        orthoposet.clone().into()
    };
    flags.insert("orthomodular", orthomodular);
    let boolean = if lattice.holds() && orthoposet.holds() {
        run(
            poset.is_distributive().map_err(CheckError::from),
            &mut internal,
        )
    } else {
        first_failure(&[lattice.clone(), orthoposet.clone()])
    };
    flags.insert("boolean", boolean);

    let prop_p = check_property_p(g);
    flags.insert("prop_P", prop_p.clone().into());
    flags.insert("prop_T", run(check_property_t(g), &mut internal));
    flags.insert("prop_U", run(check_property_u(g, cap), &mut internal));
    flags.insert(
        "orth_atom_sums_closed",
        run(check_orth_atom_sums_closed(g, cap), &mut internal),
    );
    flags.insert(
        "prop3_condition",
        run(check_prop3_condition(g), &mut internal),
    );

    let mut representation_ok = None;
    let concrete = match &flags["prop_U"] {
        Flag::True => match concrete_representation(g, cap) {
            Ok(_) => {
                representation_ok = Some(true);
                Flag::True
            }
            Err(CheckError::CapExceeded(c)) => Flag::Inconclusive(c),
            Err(e) => {
                representation_ok = Some(false);
                internal.push(e.to_string());
                Flag::NotApplicable(format!("internal inconsistency: {e}"))
            }
        },
        other => other.clone(),
    };
    flags.insert("concrete_representable", concrete);

    for (name, base, ordering) in [
        ("sj_atoms_all", SjBase::Atoms, SjOrdering::All),
        ("sj_atoms_some", SjBase::Atoms, SjOrdering::Some),
        ("sj_elements_all", SjBase::Elements, SjOrdering::All),
        ("sj_elements_some", SjBase::Elements, SjOrdering::Some),
    ] {
        flags.insert(
            name,
            run(check_property_sj(g, base, ordering, cap), &mut internal),
        );
    }
    flags.insert("prop_SJ", flags["sj_atoms_all"].clone());

    for p in 1..g.len() {
        if let Ok(d) = checks::atom_decomposition(g, p) {
            if !d.is_set() {
                notes.push(format!(
                    "splitting `{}` repeats an atom; such decompositions are excluded from A_p",
                    g.label(p)
                ));
            }
        }
    }

    let f = |name: &str| flags[name].clone();
    let mut consistency: BTreeMap<&'static str, Outcome> = BTreeMap::new();
    consistency.insert(
        "complemented_iff_all_proper",
        equivalent_under(
            true,
            &f("complemented"),
            &f("all_proper"),
            "complemented vs all proper",
        ),
    );
    consistency.insert(
        "prop_P_iff_axiom3",
        equivalent_under(true, &f("prop_P"), &f("axiom3"), "(P) vs axiom 3"),
    );
    consistency.insert(
        "axiom3_implies_ngfe",
        implies(&f("axiom3"), &f("ngfe"), "axiom 3 holds but not NGFE"),
    );
    consistency.insert(
        "axiom4_implies_axiom3",
        implies(&f("axiom4"), &f("axiom3"), "axiom 4 holds but not axiom 3"),
    );
    let concrete_gfe = if f("axiom3").is_true() && f("concrete_valued").is_true() {
        Flag::True
    } else {
        Flag::NotApplicable(String::new())
    };
    consistency.insert(
        "concrete_valued_gfe_is_algebra",
        implies(
            &concrete_gfe,
            &f("algebra"),
            "{0,1}-valued GFE is not an algebra",
        ),
    );
    let sum_join: Flag = check_sum_is_join(g).into();
    consistency.insert(
        "axiom4_sums_are_joins",
        implies(&f("axiom4"), &sum_join, "orthogonal sum is not the join"),
    );
    consistency.insert(
        "algebra_is_orthomodular",
        implies(
            &f("algebra"),
            &f("orthomodular"),
            "algebra whose poset is not orthomodular",
        ),
    );
    consistency.insert(
        "ngfe_algebra_iff_orth_atom_sums",
        equivalent_under(
            f("ngfe").is_true(),
            &f("algebra"),
            &f("orth_atom_sums_closed"),
            "algebra vs orthogonal atom sums",
        ),
    );
    consistency.insert(
        "gfe_prop_T_iff_lattice",
        equivalent_under(
            f("gfe").is_true(),
            &f("prop_T"),
            &f("lattice"),
            "(T) vs lattice",
        ),
    );
    consistency.insert(
        "prop_U_unique_decompositions",
        match (&flags["prop_U"], representation_ok) {
            (Flag::True, Some(true)) => Outcome::Pass,
            (Flag::True, Some(false)) => {
                Outcome::Fail("(U) holds but the set representation fails".into())
            }
            (Flag::True, None) | (Flag::Inconclusive(_), _) => Outcome::Inconclusive,
            _ => Outcome::Vacuous,
        },
    );
    let ortholattice = f("ortholattice").is_true();
    let mut difference_meet = equivalent_under(
        ortholattice,
        &f("algebra"),
        &f("prop3_condition"),
        "algebra vs difference-equals-meet",
    );
    if difference_meet == Outcome::Pass
        && f("prop3_condition").is_true()
        && !f("orthomodular").is_true()
    {
        difference_meet = Outcome::Fail("difference-equals-meet holds but not orthomodular".into());
    }
    consistency.insert("ortholattice_algebra_iff_difference_meet", difference_meet);
    let sj_premise =
        f("gfe").is_true() && f("all_proper").is_true() && poset.is_orthomodular_lattice();
    consistency.insert(
        "proper_oml_gfe_algebra_iff_sj",
        equivalent_under(sj_premise, &f("algebra"), &f("prop_SJ"), "algebra vs (SJ)"),
    );
    let readings = [
        "sj_atoms_all",
        "sj_atoms_some",
        "sj_elements_all",
        "sj_elements_some",
    ];
    consistency.insert("sj_readings_agree", {
        let values: Vec<&Flag> = readings.iter().map(|r| &flags[*r]).collect();
        if !sj_premise {
            Outcome::Vacuous
        } else if values.iter().any(|v| matches!(v, Flag::Inconclusive(_))) {
            Outcome::Inconclusive
        } else if values.iter().all(|v| v.as_str() == values[0].as_str()) {
            Outcome::Pass
        } else {
            let split: Vec<String> = readings
                .iter()
                .zip(&values)
                .map(|(r, v)| format!("{r}={}", v.as_str()))
                .collect();
            Outcome::Fail(split.join(","))
        }
    });
    let collapse_premise = ["ngfe", "all_proper", "prop_P", "prop_U", "prop_T"]
        .iter()
        .all(|n| f(n).is_true());
    consistency.insert("boolean_collapse", {
        if !collapse_premise {
            Outcome::Vacuous
        } else {
            let missing: Vec<&str> = [
                "algebra",
                "concrete_representable",
                "orthomodular",
                "lattice",
                "boolean",
            ]
            .into_iter()
            .filter(|n| !f(n).is_true())
            .collect();
            if missing.is_empty() {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("fails {}", missing.join(",")))
            }
        }
    });
    consistency.insert("point_states", point_states(g));
    consistency.insert(
        "internal",
        if internal.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail(internal.join("; "))
        },
    );

    let length = poset.height(poset.top());
    ClassificationReport {
        labels: g.labels().to_vec(),
        num_states: g.num_states(),
        length,
        flags,
        consistency,
        notes,
    }
}

/// The point states are full, proper exactly when every member is, and
/// when proper re-embed to an isomorphic GSE whose events are the original
/// ones restricted to the distinct states.
fn point_states(g: &EventSet) -> Outcome {
    let set = match states_of_gse(g) {
        Ok(s) => s,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    if !set.proper {
        return Outcome::Pass;
    }
    let e = match embed(g.poset(), &set) {
        Ok(e) => e,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    if !is_isomorphic(e.gse.poset(), g.poset()) {
        return Outcome::Fail("re-embedded poset is not isomorphic".into());
    }
    let mut kept: Vec<usize> = Vec::new();
    let column = |s: usize| -> Vec<_> { g.members().iter().map(|m| m.value(s).clone()).collect() };
    for s in 0..g.num_states() {
        if kept.iter().all(|&k| column(k) != column(s)) {
            kept.push(s);
        }
    }
    let same = (0..g.len()).all(|x| {
        let restricted: Vec<_> = kept.iter().map(|&s| g.member(x).value(s).clone()).collect();
        e.gse.member(e.member_of[x]).values() == restricted.as_slice()
    });
    if same {
        Outcome::Pass
    } else {
        Outcome::Fail("re-embedding changes member values".into())
    }
}

impl ClassificationReport {
    pub fn flag(&self, name: &str) -> Option<&Flag> {
        self.flags.get(name)
    }

    pub fn violations(&self) -> Vec<(&'static str, &str)> {
        self.consistency
            .iter()
            .filter_map(|(k, v)| match v {
                Outcome::Fail(msg) => Some((*k, msg.as_str())),
                _ => None,
            })
            .collect()
    }

    pub fn is_inconclusive(&self) -> bool {
        self.flags
            .values()
            .any(|f| matches!(f, Flag::Inconclusive(_)))
            || self
                .consistency
                .values()
                .any(|o| *o == Outcome::Inconclusive)
    }

    /// 0 classified, 2 consistency violation, 3 inconclusive.
    pub fn exit_code(&self) -> i32 {
        if !self.violations().is_empty() {
            2
        } else if self.is_inconclusive() {
            3
        } else {
            0
        }
    }

    fn label_list(&self, xs: &[usize]) -> String {
        label_list(&self.labels, xs)
    }

    /// Deterministic `key=value` lines sorted by key.
    pub fn machine(&self, verbose: bool) -> String {
        let mut entries: BTreeMap<String, String> = BTreeMap::new();
        entries.insert("members".into(), self.labels.len().to_string());
        entries.insert("states".into(), self.num_states.to_string());
        entries.insert("length".into(), self.length.to_string());
        for (name, flag) in &self.flags {
            if !verbose && VERBOSE_ONLY.contains(name) {
                continue;
            }
            entries.extend(flag_entries(&self.labels, name, flag));
        }
        for (name, outcome) in &self.consistency {
            entries.insert(format!("consistency.{name}"), outcome.as_str().to_string());
            if let Outcome::Fail(msg) = outcome {
                entries.insert(format!("consistency.{name}.detail"), msg.clone());
            }
        }
        if verbose {
            for (i, note) in self.notes.iter().enumerate() {
                entries.insert(format!("note.{i}"), note.clone());
            }
        }
        let mut out = String::new();
        for (k, v) in entries {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    pub fn human(&self, verbose: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} members over {} states, longest chain {}",
            self.labels.len(),
            self.num_states,
            self.length
        );
        for name in FLAG_NAMES {
            if !verbose && VERBOSE_ONLY.contains(name) {
                continue;
            }
            let flag = &self.flags[name];
            let text = match flag {
                Flag::True => "yes".to_string(),
                Flag::False(w) => {
                    let mut s = format!(
                        "no   {} at {}",
                        w.kind.as_str(),
                        self.label_list(&w.elements)
                    );
                    if !w.detail.is_empty() {
                        let detail: Vec<String> = w
                            .detail
                            .iter()
                            .map(|d| format!("{{{}}}", self.label_list(d)))
                            .collect();
                        let _ = write!(s, " {}", detail.join(" "));
                    }
                    s
                }
                Flag::NotApplicable(reason) => format!("n/a  {reason}"),
                Flag::Inconclusive(cap) => format!("??   search cap {cap} reached"),
            };
            let _ = writeln!(out, "  {name:<24} {text}");
        }
        let violations = self.violations();
        let _ = writeln!(
            out,
            "consistency: {} checks, {} violations",
            self.consistency.len(),
            violations.len()
        );
        for (name, outcome) in &self.consistency {
            if verbose || outcome.is_fail() {
                let _ = write!(out, "  {name:<42} {}", outcome.as_str());
                if let Outcome::Fail(msg) = outcome {
                    let _ = write!(out, "  {msg}");
                }
                out.push('\n');
            }
        }
        if verbose {
            for note in &self.notes {
                let _ = writeln!(out, "note: {note}");
            }
        }
        out
    }
}

fn label_list(labels: &[String], xs: &[usize]) -> String {
    xs.iter()
        .map(|&x| labels[x].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

/// Key/value pairs for one flag: the value, and on failure the witness
/// kind, labels and any detail groups.
pub fn flag_entries(labels: &[String], name: &str, flag: &Flag) -> Vec<(String, String)> {
    let mut out = vec![(name.to_string(), flag.as_str().to_string())];
    match flag {
        Flag::False(w) => {
            out.push((format!("{name}.kind"), w.kind.as_str().to_string()));
            out.push((format!("{name}.witness"), label_list(labels, &w.elements)));
            if !w.detail.is_empty() {
                let detail: Vec<String> = w.detail.iter().map(|d| label_list(labels, d)).collect();
                out.push((format!("{name}.detail"), detail.join(";")));
            }
        }
        Flag::NotApplicable(reason) => out.push((format!("{name}.reason"), reason.clone())),
        Flag::Inconclusive(cap) => out.push((format!("{name}.cap"), cap.to_string())),
        Flag::True => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn report(g: &EventSet) -> ClassificationReport {
        classify(g, ClassifyOptions::default())
    }

    fn t(r: &ClassificationReport, name: &str) -> bool {
        r.flags[name].is_true()
    }

    #[test]
    fn even4() {
        let r = report(&fixtures::even(4));
        for name in [
            "gfe",
            "ngfe",
            "algebra",
            "lattice",
            "orthomodular",
            "concrete_valued",
        ] {
            assert!(t(&r, name), "{name}");
        }
        assert!(r.flags["prop_U"].is_false());
        assert!(r.flags["boolean"].is_false());
        assert!(r.violations().is_empty(), "{:?}", r.violations());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn hex() {
        let r = report(&fixtures::hex());
        for name in ["gfe", "ngfe", "algebra", "orthomodular", "prop3_condition"] {
            assert!(r.flags[name].is_false(), "{name}");
        }
        assert!(t(&r, "ortholattice"));
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }

    #[test]
    fn even6() {
        let r = report(&fixtures::even(6));
        assert!(t(&r, "algebra") && t(&r, "concrete_valued"));
        assert!(r.flags["lattice"].is_false() && r.flags["prop_T"].is_false());
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }

    #[test]
    fn corpus_is_consistent() {
        for (name, g) in fixtures::named_gse() {
            let r = report(&g);
            assert!(r.violations().is_empty(), "{name}: {:?}", r.violations());
            assert_eq!(r.exit_code(), 0, "{name}");
            for flag in r.flags.values() {
                if let Flag::False(w) = flag {
                    assert!(!w.elements.is_empty());
                }
            }
        }
    }

    #[test]
    fn machine_output_is_sorted_and_stable() {
        let g = fixtures::even(4);
        let a = report(&g).machine(false);
        let b = report(&g).machine(false);
        assert_eq!(a, b);
        let keys: Vec<&str> = a.lines().map(|l| l.split('=').next().unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(a.contains("\nalgebra=true\n") || a.starts_with("algebra=true\n"));
        assert!(a.contains("\nprop_U=false\n"));
        assert!(!a.contains("sj_atoms_some"));
    }

    #[test]
    fn exit_code_on_cap() {
        let r = classify(
            &fixtures::even(6),
            ClassifyOptions {
                cap: SearchCap { max_nodes: 3 },
            },
        );
        assert_eq!(r.exit_code(), 3);
    }
}
