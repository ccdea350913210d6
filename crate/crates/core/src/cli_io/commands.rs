//! The four commands of the binary as library functions returning an exit
//! status and the report text, so they can be tested without a process.

use std::fmt::Write as _;
use std::path::Path;

use crate::crossed_product::{stab_alg_membership, stab_m_membership, stab_w_membership};
use crate::error::{AlgebraError, Result};
use crate::foundations::{subspace_contained, GroupSpec};
use crate::graded_solver::{kernel_report, Family, GradedKernelReport};
use crate::lie_side::{
    dmr0_lie_membership, lyndon_basis, stab_alg_lie_membership, stab_m_lie_membership, stab_mod_lie_membership,
    stab_w_lie_membership,
};
use crate::racinet_group::{dmr0_membership, stab_mod_membership};
use crate::verdict::Verdict;
use crate::word_algebras::XSeries;

use super::document::{emit_series, parse_series, TypedSeries};
use super::mlv::{mlv_eval, MlvQuery};
use super::suites::{run_suites, select_suites, SuiteConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Number of random words audited by the Lie-side `Stab(Δ^W)` check.
const STAB_W_LIE_AUDIT_WORDS: usize = 16;

/// Exit status and report text of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub text: String,
}

impl CommandOutput {
    fn error(e: &AlgebraError) -> Self {
        CommandOutput { code: EXIT_ERROR, text: format!("error: {e}\n") }
    }

    fn from_result(r: Result<CommandOutput>) -> Self {
        r.unwrap_or_else(|e| Self::error(&e))
    }
}

/// Membership test selected by `check --which`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Dmr0,
    StabMod,
    StabW,
    StabM,
    StabAlg,
    Dmr0Lie,
    StabModLie,
    StabWLie,
    StabMLie,
    StabAlgLie,
}

impl Which {
    pub const ALL: [Which; 10] = [
        Which::Dmr0,
        Which::StabMod,
        Which::StabW,
        Which::StabM,
        Which::StabAlg,
        Which::Dmr0Lie,
        Which::StabModLie,
        Which::StabWLie,
        Which::StabMLie,
        Which::StabAlgLie,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Which::Dmr0 => "dmr0",
            Which::StabMod => "stab-mod",
            Which::StabW => "stab-w",
            Which::StabM => "stab-m",
            Which::StabAlg => "stab-alg",
            Which::Dmr0Lie => "dmr0-lie",
            Which::StabModLie => "stab-mod-lie",
            Which::StabWLie => "stab-w-lie",
            Which::StabMLie => "stab-m-lie",
            Which::StabAlgLie => "stab-alg-lie",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|w| w.tag() == s).ok_or_else(|| {
            let known: Vec<&str> = Self::ALL.iter().map(|w| w.tag()).collect();
            AlgebraError::Unsupported(format!("unknown membership test '{s}'; expected one of {}", known.join(", ")))
        })
    }

    /// Whether the input is a Lie element rather than a grouplike series.
    pub fn is_lie(self) -> bool {
        matches!(self, Which::Dmr0Lie | Which::StabModLie | Which::StabWLie | Which::StabMLie | Which::StabAlgLie)
    }

    pub fn run(self, psi: &XSeries) -> Result<Verdict> {
        match self {
            Which::Dmr0 => dmr0_membership(psi),
            Which::StabMod => stab_mod_membership(psi),
            Which::StabW => stab_w_membership(psi, false),
            Which::StabM => stab_m_membership(psi),
            Which::StabAlg => stab_alg_membership(psi),
            Which::Dmr0Lie => dmr0_lie_membership(psi),
            Which::StabModLie => stab_mod_lie_membership(psi),
            Which::StabWLie => stab_w_lie_membership(psi, STAB_W_LIE_AUDIT_WORDS, 0),
            Which::StabMLie => stab_m_lie_membership(psi),
            Which::StabAlgLie => stab_alg_lie_membership(psi),
        }
    }
}

/// Reconciles a document with the `--group` and `--cap` flags: the group
/// must match, and a smaller cap truncates.
fn reconcile(series: XSeries, group: Option<&GroupSpec>, cap: Option<usize>) -> Result<XSeries> {
    if let Some(g) = group {
        if g != series.group() {
            return Err(AlgebraError::Structural(format!(
                "--group {g} does not match the document group {}",
                series.group()
            )));
        }
    }
    match cap {
        None => Ok(series),
        Some(c) if c <= series.cap() => Ok(series.with_cap(c)),
        Some(c) => Err(AlgebraError::CapMismatch { left: c, right: series.cap() }),
    }
}

/// `check`: one membership test on an `X` series document.
pub fn cmd_check(which: Which, document: &str, cap: Option<usize>, group: Option<&GroupSpec>) -> CommandOutput {
    CommandOutput::from_result((|| {
        let series = match parse_series(document)? {
            TypedSeries::X(s) => s,
            other => {
                return Err(AlgebraError::Structural(format!(
                    "check needs an X document, got alphabet {}",
                    other.alphabet().tag()
                )))
            }
        };
        let psi = reconcile(series, group, cap)?;
        let verdict = which.run(&psi)?;
        let mut text = format!("check-report v1\nwhich: {}\ngroup: {}\ncap: {}\n", which.tag(), psi.group(), psi.cap());
        text.push_str(&verdict.to_string());
        if let Some(f) = verdict.first_failure() {
            writeln!(text, "witness: {}", f.witness.as_deref().unwrap_or("")).expect("string write");
        }
        let code = if verdict.is_member() { EXIT_PASS } else { EXIT_FAIL };
        Ok(CommandOutput { code, text })
    })())
}

/// Truncation cap used for degree `n` when none is given: two degrees of
/// headroom, so that the top-degree artifacts of the generator-level
/// conditions do not enter the table.
pub fn default_cap(n: usize) -> usize {
    n + 2
}

/// Parameters of `dims`.
#[derive(Debug, Clone)]
pub struct DimsRequest {
    pub group: GroupSpec,
    pub max_degree: usize,
    pub families: Vec<Family>,
    /// Fixed cap for every degree; `None` uses [`default_cap`].
    pub cap: Option<usize>,
}

/// Kernel reports of `dims`, grouped by degree.
#[derive(Debug, Clone)]
pub struct DimsTable {
    pub request: DimsRequest,
    pub rows: Vec<DimsRow>,
}

#[derive(Debug, Clone)]
pub struct DimsRow {
    pub degree: usize,
    pub cap: usize,
    pub reports: Vec<GradedKernelReport>,
    /// `(statement, holds)` for each applicable inclusion.
    pub inclusions: Vec<(String, bool)>,
}

impl DimsTable {
    pub fn dimension(&self, degree: usize, family: Family) -> Option<usize> {
        self.rows
            .iter()
            .find(|r| r.degree == degree)?
            .reports
            .iter()
            .find(|k| k.family == family)
            .map(|k| k.dimension)
    }

    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.inclusions.iter().all(|(_, ok)| *ok) && r.reports.iter().all(|k| k.reverified))
    }

    /// The dimension lines only, the stable part used by golden files.
    pub fn dimension_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let dims: Vec<String> = r.reports.iter().map(|k| format!("{} {}", k.family.tag(), k.dimension)).collect();
            writeln!(out, "group {} degree {} cap {}: {}", self.request.group, r.degree, r.cap, dims.join(", "))
                .expect("string write");
        }
        out
    }
}

impl std::fmt::Display for DimsTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "dims-report v1")?;
        writeln!(f, "group: {}", self.request.group)?;
        writeln!(f, "max-degree: {}", self.request.max_degree)?;
        match self.request.cap {
            Some(c) => writeln!(f, "cap: {c}")?,
            None => writeln!(f, "cap: degree + 2")?,
        }
        for r in &self.rows {
            let dims: Vec<String> = r.reports.iter().map(|k| format!("{} {}", k.family.tag(), k.dimension)).collect();
            writeln!(f, "degree {} cap {}: {}", r.degree, r.cap, dims.join(", "))?;
            for k in &r.reports {
                if !k.reverified {
                    writeln!(f, "  [FAIL] {} kernel vector failed re-verification", k.family.tag())?;
                }
            }
            for (s, ok) in &r.inclusions {
                writeln!(f, "  [{}] {s}", if *ok { "pass" } else { "FAIL" })?;
            }
        }
        Ok(())
    }
}

/// Computes the kernels and the inclusions among them, degree by degree.
pub fn dims_table(req: &DimsRequest) -> Result<DimsTable> {
    if req.max_degree == 0 {
        return Err(AlgebraError::Domain("--max-degree must be at least 1".into()));
    }
    let mut families = req.families.clone();
    families.sort();
    families.dedup();
    if families.contains(&Family::Dmr0) && !req.group.is_cyclic() {
        return Err(AlgebraError::Unsupported(format!("dmr0 needs a cyclic group, got {}", req.group)));
    }
    let mut rows = Vec::new();
    for n in 1..=req.max_degree {
        let cap = req.cap.unwrap_or_else(|| default_cap(n));
        let reports: Vec<GradedKernelReport> =
            families.iter().map(|&f| kernel_report(f, n, &req.group, cap)).collect::<Result<_>>()?;
        let find = |f: Family| reports.iter().find(|k| k.family == f);
        let mut inclusions = Vec::new();
        for (small, big) in [(Family::Dmr0, Family::StabMod), (Family::StabMod, Family::StabAlg)] {
            if let (Some(a), Some(b)) = (find(small), find(big)) {
                let ok = subspace_contained(&a.basis, &b.basis)?;
                inclusions.push((format!("{} ⊆ {}", small.tag(), big.tag()), ok));
            }
        }
        rows.push(DimsRow { degree: n, cap, reports, inclusions });
    }
    Ok(DimsTable { request: DimsRequest { families, ..req.clone() }, rows })
}

/// Writes one witness document per nonzero kernel: the first kernel vector
/// as a Lie element, named `<family>-n<degree>.series` with the `check` spelling of the family.
pub fn emit_witnesses(table: &DimsTable, dir: &Path) -> Result<Vec<String>> {
    std::fs::create_dir_all(dir).map_err(|e| AlgebraError::Structural(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for r in &table.rows {
        for k in &r.reports {
            let Some(v) = k.basis.first() else { continue };
            let psi = lyndon_basis(&table.request.group, r.degree, r.cap).combine(v);
            let name = format!("{}-n{}.series", k.family.tag().replace('_', "-"), r.degree);
            let mut text = format!("# first {} kernel vector in degree {}\n", k.family.tag(), r.degree);
            text.push_str(&emit_series(&TypedSeries::X(psi)));
            let path = dir.join(&name);
            std::fs::write(&path, text).map_err(|e| AlgebraError::Structural(format!("{}: {e}", path.display())))?;
            written.push(name);
        }
    }
    Ok(written)
}

/// `dims`: exit 0 if every inclusion holds and every kernel vector passes
/// its membership test, 1 otherwise.
pub fn cmd_dims(req: &DimsRequest, emit_witness: Option<&Path>) -> CommandOutput {
    CommandOutput::from_result((|| {
        let table = dims_table(req)?;
        let mut text = table.to_string();
        if let Some(dir) = emit_witness {
            for name in emit_witnesses(&table, dir)? {
                writeln!(text, "witness: {}", dir.join(name).display()).expect("string write");
            }
        }
        Ok(CommandOutput { code: if table.all_hold() { EXIT_PASS } else { EXIT_FAIL }, text })
    })())
}

/// `verify`: exit 0 iff every selected identity passes.
pub fn cmd_verify(suite: &str, config: &SuiteConfig) -> CommandOutput {
    CommandOutput::from_result((|| {
        let report = run_suites(&select_suites(suite)?, config)?;
        Ok(CommandOutput { code: if report.all_passed() { EXIT_PASS } else { EXIT_FAIL }, text: report.to_string() })
    })())
}

/// `mlv`: floating-point estimate of one multiple L-value.
pub fn cmd_mlv(query: &MlvQuery) -> CommandOutput {
    CommandOutput::from_result((|| {
        let e = mlv_eval(query)?;
        let ks: Vec<String> = query.ks.iter().map(u32::to_string).collect();
        let roots: Vec<String> = query.roots.iter().map(u32::to_string).collect();
        let text = format!(
            "mlv-report v1\nexponents: {}\nroots: {}\norder: {}\nbound: {}\nvalue: {:.15e} {:+.15e}i\nerror-bound: {:.3e}\npartial-sum: {:.15e} {:+.15e}i\n",
            ks.join(" "),
            roots.join(" "),
            query.order,
            query.bound,
            e.value.re,
            e.value.im,
            e.error_bound,
            e.partial_sum.re,
            e.partial_sum.im,
        );
        Ok(CommandOutput { code: EXIT_PASS, text })
    })())
}
