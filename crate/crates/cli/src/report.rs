use serde::Serialize;
use std::fmt::Write;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    InconclusiveWindow,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::InconclusiveWindow => "inconclusive-window",
        }
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A closed formula for the family.
    Formula,
    /// Recomputed independently inside the check.
    Oracle,
    /// Holds by definition or construction.
    Definition,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub claim_id: String,
    /// Acceptance criterion this check belongs to, as `criterion N: ...`.
    pub anchor: String,
    pub inputs: serde_json::Value,
    pub expected: String,
    pub source: Source,
    pub computed: String,
    pub verdict: Verdict,
    pub runtime_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive_window: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub p: u32,
    pub seed: u64,
    pub ext_degree: usize,
    pub toolchain: String,
    pub records: Vec<Record>,
    pub summary: Summary,
}

pub fn toolchain() -> String {
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    format!(
        "pnil {} / {} / {}-{} / {profile}",
        env!("CARGO_PKG_VERSION"),
        env!("PNIL_RUSTC_VERSION"),
        std::env::consts::ARCH,
        std::env::consts::OS
    )
}

impl SuiteReport {
    pub fn new(suite: &str, p: u32, seed: u64, ext_degree: usize, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        let count = |v| records.iter().filter(|r| r.verdict == v).count();
        let summary = Summary {
            pass: count(Verdict::Pass),
            fail: count(Verdict::Fail),
            inconclusive_window: count(Verdict::InconclusiveWindow),
        };
        SuiteReport { suite: suite.to_string(), p, seed, ext_degree, toolchain: toolchain(), records, summary }
    }

    pub fn has_fail(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn has_inconclusive(&self) -> bool {
        self.summary.inconclusive_window > 0
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {} (p={}, seed={}, e={})", self.suite, self.p, self.seed, self.ext_degree);
        let w = self.records.iter().map(|r| r.claim_id.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(s, "{:<w$}  {:<19}  {:>9}  expected | computed", "claim", "verdict", "ms");
        for r in &self.records {
            let _ = writeln!(
                s,
                "{:<w$}  {:<19}  {:>9.1}  {} | {}",
                r.claim_id,
                r.verdict.as_str(),
                r.runtime_ms,
                r.expected,
                r.computed
            );
        }
        let _ = writeln!(
            s,
            "{} pass, {} fail, {} inconclusive-window",
            self.summary.pass, self.summary.fail, self.summary.inconclusive_window
        );
        s
    }
}

/// Accumulates records for one suite run.
#[derive(Default)]
pub struct Checks {
    pub records: Vec<Record>,
}

impl Checks {
    /// Checks that `computed()` renders the same string as `expected`.
    pub fn eq(
        &mut self,
        claim_id: impl Into<String>,
        anchor: &str,
        inputs: serde_json::Value,
        source: Source,
        expected: impl Into<String>,
        computed: impl FnOnce() -> String,
    ) {
        let expected = expected.into();
        let t = Instant::now();
        let got = computed();
        let verdict = if got == expected { Verdict::Pass } else { Verdict::Fail };
        self.push(claim_id.into(), anchor, inputs, source, expected, got, verdict, t);
    }

    /// `check()` returns the verdict and a rendering of what it computed.
    pub fn custom(
        &mut self,
        claim_id: impl Into<String>,
        anchor: &str,
        inputs: serde_json::Value,
        source: Source,
        expected: impl Into<String>,
        check: impl FnOnce() -> (Verdict, String),
    ) {
        let t = Instant::now();
        let (verdict, got) = check();
        self.push(claim_id.into(), anchor, inputs, source, expected.into(), got, verdict, t);
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        claim_id: String,
        anchor: &str,
        inputs: serde_json::Value,
        source: Source,
        expected: String,
        computed: String,
        verdict: Verdict,
        t: Instant,
    ) {
        self.records.push(Record {
            claim_id,
            anchor: anchor.to_string(),
            inputs,
            expected,
            source,
            computed,
            verdict,
            runtime_ms: t.elapsed().as_secs_f64() * 1e3,
        });
    }
}
