//! Structured verification results.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One checked instance of one identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Section {
    pub summary: Summary,
    pub entries: Vec<Entry>,
}

impl Section {
    fn finish(mut entries: Vec<Entry>) -> Self {
        entries.sort_by(|a, b| (&a.identity, &a.params).cmp(&(&b.identity, &b.params)));
        let failed = entries.iter().filter(|e| e.verdict == Verdict::Fail).count();
        Section {
            summary: Summary {
                total: entries.len(),
                passed: entries.len() - failed,
                failed,
            },
            entries,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail)
    }
}

/// Verification output. `corrected` holds the identities the library
/// implements; `printed` holds the misprinted variants, which are expected
/// to fail.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct IdentityReport {
    pub corrected: Section,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<Section>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.corrected.summary.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

/// Parameter map builder: `params!["n" => 3, "q" => "1/2"]`.
#[macro_export]
macro_rules! params {
    ($($key:expr => $value:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut map = ::std::collections::BTreeMap::<String, String>::new();
        $( map.insert($key.to_string(), $value.to_string()); )*
        map
    }};
}

/// Accumulates entries for one section.
#[derive(Debug, Default)]
pub struct Recorder {
    entries: Vec<Entry>,
}

impl Recorder {
    pub fn new() -> Self {
        Recorder::default()
    }

    /// Exact comparison: passes iff `lhs == rhs`.
    pub fn exact<T: PartialEq + Display>(
        &mut self,
        identity: &str,
        params: BTreeMap<String, String>,
        lhs: &T,
        rhs: &T,
    ) {
        let verdict = if lhs == rhs { Verdict::Pass } else { Verdict::Fail };
        self.entries.push(Entry {
            identity: identity.to_string(),
            params,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            verdict,
        });
    }

    /// Float comparison with an absolute tolerance, or relative to `|rhs|`
    /// when `relative` is set. The tolerance is recorded among the params.
    pub fn approx(
        &mut self,
        identity: &str,
        mut params: BTreeMap<String, String>,
        lhs: f64,
        rhs: f64,
        tol: f64,
        relative: bool,
    ) {
        let bound = if relative { tol * rhs.abs() } else { tol };
        let ok = (lhs - rhs).abs() <= bound;
        params.insert(
            "tol".into(),
            format!("{tol:e}{}", if relative { " rel" } else { " abs" }),
        );
        self.entries.push(Entry {
            identity: identity.to_string(),
            params,
            lhs: format!("{lhs:e}"),
            rhs: format!("{rhs:e}"),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        });
    }

    /// A predicate that is not an equality (e.g. monotonicity); `detail`
    /// goes in `lhs`, the requirement in `rhs`.
    pub fn holds(
        &mut self,
        identity: &str,
        params: BTreeMap<String, String>,
        ok: bool,
        detail: String,
        requirement: &str,
    ) {
        self.entries.push(Entry {
            identity: identity.to_string(),
            params,
            lhs: detail,
            rhs: requirement.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        });
    }

    pub fn extend(&mut self, other: Recorder) {
        self.entries.extend(other.entries);
    }

    pub fn finish(self) -> Section {
        Section::finish(self.entries)
    }
}
