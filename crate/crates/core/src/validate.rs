//! Corpus cross-validation: family solver, exact solver and lower bounds on
//! every generated instance.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::connected_forcing_number_exact;
use crate::family::{applicable_method, solve_auto, Method};
use crate::forcing::{is_connected_set, is_forcing_set};
use crate::generate::{generate, GeneratorSpec};
use crate::graph::{BlockDecomposition, Graph};
use crate::structure::{lower_bounds, structural_sets};

/// Largest instance the corpus runner will hand to the exact solver.
pub const MAX_EXACT_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationConfig {
    pub specs: Vec<GeneratorSpec>,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
}

/// Instance counts and size limits for [`ValidationConfig::corpus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSizes {
    pub trees: usize,
    pub unicyclic: usize,
    pub cactus: usize,
    pub block: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
}

impl Default for CorpusSizes {
    fn default() -> Self {
        CorpusSizes {
            trees: 500,
            unicyclic: 500,
            cactus: 200,
            block: 200,
            min_n: 4,
            max_n: 12,
            seed: 0,
        }
    }
}

impl ValidationConfig {
    /// Random trees, unicyclic graphs and pendant-free cactus and block
    /// graphs with sizes cycling through `min_n..=max_n`; instance `i` of a
    /// family uses seed `seed + i`.
    pub fn corpus(sizes: CorpusSizes) -> Result<Self> {
        if sizes.min_n < 3 || sizes.min_n > sizes.max_n {
            return Err(Error::InvalidParameter(format!(
                "size range {}..={} must satisfy 3 <= min <= max",
                sizes.min_n, sizes.max_n
            )));
        }
        let span = sizes.max_n - sizes.min_n + 1;
        let n_of = |i: usize| sizes.min_n + i % span;
        let seed_of = |i: usize| sizes.seed + i as u64;
        let mut specs = Vec::new();
        specs.extend((0..sizes.trees).map(|i| GeneratorSpec::RandomTree { n: n_of(i), seed: seed_of(i) }));
        specs.extend((0..sizes.unicyclic).map(|i| GeneratorSpec::RandomUnicyclic { n: n_of(i), seed: seed_of(i) }));
        specs.extend((0..sizes.cactus).map(|i| GeneratorSpec::RandomCactus { n: n_of(i), seed: seed_of(i) }));
        specs.extend((0..sizes.block).map(|i| GeneratorSpec::RandomBlock { n: n_of(i), seed: seed_of(i) }));
        Ok(ValidationConfig { specs, jobs: 0 })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationRow {
    pub spec: GeneratorSpec,
    pub n: usize,
    pub m: usize,
    pub method: Option<Method>,
    pub family_value: Option<usize>,
    pub exact_value: Option<usize>,
    pub bound_m: Option<i64>,
    pub bound_blocks: Option<i64>,
    pub pass: bool,
    pub error: Option<String>,
    /// Full edge list, kept on failing rows only.
    pub edges: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub rows: Vec<ValidationRow>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl ValidationReport {
    pub fn failures(&self) -> impl Iterator<Item = &ValidationRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_csv(&self) -> String {
        #[derive(Serialize)]
        struct CsvRow<'a> {
            spec: String,
            n: usize,
            m: usize,
            method: &'a str,
            family_value: Option<usize>,
            exact_value: Option<usize>,
            bound_m: Option<i64>,
            bound_blocks: Option<i64>,
            pass: bool,
            error: Option<&'a str>,
            edges: String,
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            let edges = r
                .edges
                .as_ref()
                .map(|es| es.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            w.serialize(CsvRow {
                spec: r.spec.to_string(),
                n: r.n,
                m: r.m,
                method: method_name(r.method),
                family_value: r.family_value,
                exact_value: r.exact_value,
                bound_m: r.bound_m,
                bound_blocks: r.bound_blocks,
                pass: r.pass,
                error: r.error.as_deref(),
                edges,
            })
            .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is UTF-8")
    }

    pub fn to_table(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut out = String::new();
        let width = self.rows.iter().map(|r| r.spec.to_string().len()).max().unwrap_or(4).max(4);
        writeln!(
            out,
            "{:<width$}  {:>3}  {:<10}  {:>6}  {:>5}  {:>3}  {:>6}  result",
            "spec", "n", "method", "family", "exact", "|M|", "blocks"
        )
        .unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:<width$}  {:>3}  {:<10}  {:>6}  {:>5}  {:>3}  {:>6}  {}",
                r.spec.to_string(),
                r.n,
                method_name(r.method),
                opt(r.family_value.map(|v| v.to_string())),
                opt(r.exact_value.map(|v| v.to_string())),
                opt(r.bound_m.map(|v| v.to_string())),
                opt(r.bound_blocks.map(|v| v.to_string())),
                if r.pass { "ok".to_string() } else { format!("FAIL {}", r.error.as_deref().unwrap_or("")) }
            )
            .unwrap();
        }
        writeln!(out, "{} instances, {} passed, {} failed", self.total, self.passed, self.failed).unwrap();
        out
    }
}

fn method_name(m: Option<Method>) -> &'static str {
    match m {
        None => "-",
        Some(Method::Tree) => "tree",
        Some(Method::Unicyclic) => "unicyclic",
        Some(Method::Cycle) => "cycle",
        Some(Method::BlockGraph) => "block",
        Some(Method::Cactus) => "cactus",
        Some(Method::Greedy) => "greedy",
        Some(Method::Exact) => "exact",
    }
}

/// Runs every spec. Solver errors become failing rows; only configuration
/// problems are returned as errors. Rows come back sorted by spec.
pub fn validate_corpus(config: &ValidationConfig) -> Result<ValidationReport> {
    if config.specs.is_empty() {
        return Err(Error::InvalidParameter("no instances configured".into()));
    }
    for spec in &config.specs {
        let n = generate(*spec)?.n();
        if n > MAX_EXACT_N {
            return Err(Error::CapExceeded { size: n, cap: MAX_EXACT_N });
        }
    }
    let run = || config.specs.par_iter().map(|&s| check_instance(s)).collect::<Vec<_>>();
    let mut rows = if config.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(run)
    };
    rows.sort_by_key(|r| r.spec);
    let passed = rows.iter().filter(|r| r.pass).count();
    Ok(ValidationReport {
        total: rows.len(),
        failed: rows.len() - passed,
        passed,
        rows,
    })
}

fn check_instance(spec: GeneratorSpec) -> ValidationRow {
    let g = generate(spec).expect("specs were generated once already");
    let mut row = ValidationRow {
        spec,
        n: g.n(),
        m: g.m(),
        method: None,
        family_value: None,
        exact_value: None,
        bound_m: None,
        bound_blocks: None,
        pass: false,
        error: None,
        edges: None,
    };
    match evaluate(&g, &mut row) {
        Ok(()) => row.pass = true,
        Err(msg) => {
            row.error = Some(msg);
            row.edges = Some(g.edges().to_vec());
        }
    }
    row
}

fn evaluate(g: &Graph, row: &mut ValidationRow) -> std::result::Result<(), String> {
    let exact = connected_forcing_number_exact(g).map_err(|e| e.to_string())?.value;
    row.exact_value = Some(exact);
    row.method = applicable_method(g).map_err(|e| e.to_string())?;
    if row.method.is_some() {
        let fam = solve_auto(g).map_err(|e| e.to_string())?.result;
        row.family_value = Some(fam.value);
        let valid = fam.witness.len() == fam.value
            && is_forcing_set(g, &fam.witness).unwrap_or(false)
            && is_connected_set(g, &fam.witness).unwrap_or(false);
        if !valid {
            return Err(format!("family witness {:?} is not a connected forcing set", fam.witness));
        }
        if fam.value != exact {
            return Err(format!("family value {} != exact {}", fam.value, exact));
        }
    }
    if let Ok(ss) = structural_sets(g) {
        let d = BlockDecomposition::new(g).map_err(|e| e.to_string())?;
        let b = lower_bounds(g, &d, &ss).map_err(|e| e.to_string())?;
        row.bound_m = Some(b.bound_m);
        row.bound_blocks = Some(b.bound_blocks);
        if b.best() > exact as i64 {
            return Err(format!("lower bound {} exceeds exact {}", b.best(), exact));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_passes() {
        let sizes = CorpusSizes {
            trees: 20,
            unicyclic: 20,
            cactus: 10,
            block: 10,
            min_n: 4,
            max_n: 9,
            seed: 100,
        };
        let report = validate_corpus(&ValidationConfig::corpus(sizes).unwrap()).unwrap();
        assert_eq!((report.total, report.failed, report.exit_code()), (60, 0, 0));
        assert!(report.rows.windows(2).all(|w| w[0].spec <= w[1].spec));
        assert!(report.rows.iter().all(|r| r.method.is_some()));
    }

    #[test]
    fn emission_formats() {
        let config = ValidationConfig {
            specs: vec![GeneratorSpec::Star { leaves: 3 }, GeneratorSpec::Cycle { n: 5 }],
            jobs: 1,
        };
        let report = validate_corpus(&config).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with("spec,n,m,method"));
        assert_eq!(lines.next().unwrap(), "cycle(n=5),5,5,cycle,2,2,0,2,true,,");
        assert!(report.to_table().contains("2 instances, 2 passed, 0 failed"));
        assert!(serde_json::to_string(&report).unwrap().contains(r#""family":"star""#));
    }

    #[test]
    fn configuration_errors() {
        assert!(validate_corpus(&ValidationConfig { specs: vec![], jobs: 0 }).is_err());
        let big = ValidationConfig {
            specs: vec![GeneratorSpec::Path { n: 40 }],
            jobs: 0,
        };
        assert!(matches!(validate_corpus(&big), Err(Error::CapExceeded { .. })));
        assert!(ValidationConfig::corpus(CorpusSizes { min_n: 2, ..Default::default() }).is_err());
    }
}
