//! Serializable reports. Text rendering is line oriented and stable; JSON
//! goes through serde with ordered containers only, so output is
//! byte-for-byte reproducible.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use xsquare_algebra::{GradedDims, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    /// Number of instances evaluated.
    pub checked: usize,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    /// First offending instance and its nonzero residue.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Pass, checked: 0, note: String::new(), witness: None }
    }

    pub fn info(id: impl Into<String>, note: impl Into<String>) -> Self {
        Check { status: Status::Info, note: note.into(), ..Check::new(id) }
    }

    pub fn from_bool(id: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        let mut c = Check::new(id);
        c.note = note.into();
        c.expect(ok, || "does not hold".to_string());
        c
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Records one instance whose residue must be zero.
    pub fn zero(&mut self, what: impl FnOnce() -> String, residue: &Polynomial) {
        self.checked += 1;
        if !residue.is_zero() && self.status != Status::Info {
            self.fail(|| format!("{}: residue {residue}", what()));
        }
    }

    /// Records one instance that must hold.
    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.status != Status::Info {
            self.fail(what);
        }
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        self.status = Status::Fail;
        if self.witness.is_none() {
            self.witness = Some(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({} checked)", self.status, self.id, self.checked)?;
        if !self.note.is_empty() {
            write!(f, " {}", self.note)?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n    witness: {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            writeln!(f, "  {}", indent(&c.to_string()))?;
        }
        Ok(())
    }
}

fn indent(s: &str) -> String {
    s.replace('\n', "\n  ")
}

/// A filtered dimension sequence: entry `d` is the dimension of the degree
/// `<= d` piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRow {
    pub name: String,
    pub dims: Vec<u64>,
}

impl DimsRow {
    pub fn new(name: impl Into<String>, dims: &GradedDims) -> Self {
        DimsRow { name: name.into(), dims: dims.dims.clone() }
    }
}

impl fmt::Display for DimsRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.dims.iter().map(u64::to_string).collect();
        write!(f, "{}: [{}]", self.name, body.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub name: String,
    pub ring: Vec<String>,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub level: usize,
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerSummary {
    pub corner: String,
    pub ring: String,
    pub numerator: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub field: String,
    pub order: String,
    pub rings: Vec<RingSummary>,
    pub identities: Check,
    pub ideals: Vec<IdealSummary>,
    pub explicit_forms: Vec<Check>,
    pub square: Vec<CornerSummary>,
    pub h_rule: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suites: Vec<AxiomReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(AxiomReport::passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopySection {
    pub title: String,
    pub rows: Vec<DimsRow>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyReport {
    pub max_degree: u64,
    pub sections: Vec<HomotopySection>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.checks.iter().all(Check::passed))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub max_degree: u64,
    pub sections: Vec<HomotopySection>,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.checks.iter().all(Check::passed))
    }
}

impl fmt::Display for HomotopySection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        for c in &self.checks {
            writeln!(f, "  {}", indent(&c.to_string()))?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness {w}")?;
        }
        Ok(())
    }
}

impl fmt::Display for HomotopyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "filtered dimensions, degrees 0..={}", self.max_degree)?;
        for s in &self.sections {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "comparisons, degrees 0..={}", self.max_degree)?;
        for s in &self.sections {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            write!(f, "{s}")?;
        }
        let verdict = if self.passed() { "all suites pass" } else { "verification FAILED" };
        writeln!(f, "{verdict}")
    }
}

impl fmt::Display for BuildReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {} order {}", self.field, self.order)?;
        for r in &self.rings {
            let vars: Vec<String> =
                r.variables.iter().zip(&r.weights).map(|(v, w)| format!("{v}:{w}")).collect();
            writeln!(f, "E{} = k[{}]", r.level, vars.join(", "))?;
        }
        writeln!(f, "{}", self.identities)?;
        for c in &self.explicit_forms {
            writeln!(f, "{c}")?;
        }
        for i in &self.ideals {
            let body = if i.basis.is_empty() { "0".to_string() } else { i.basis.join(", ") };
            writeln!(f, "{} = ({})", i.name, body)?;
        }
        writeln!(f, "crossed square:")?;
        for c in &self.square {
            let num = if c.numerator.is_empty() { "0".to_string() } else { c.numerator.join(", ") };
            let rel = if c.relations.is_empty() { "0".to_string() } else { c.relations.join(", ") };
            writeln!(f, "  {} = ({}) / ({}) in {}", c.corner, num, rel, c.ring)?;
        }
        writeln!(f, "  {}", self.h_rule)
    }
}

/// Renders a JSON report with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Joins displayed items, one per line.
pub fn lines<T: fmt::Display>(items: &[T]) -> String {
    let mut s = String::new();
    for i in items {
        let _ = writeln!(s, "{i}");
    }
    s
}
