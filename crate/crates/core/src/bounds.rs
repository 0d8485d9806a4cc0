//! Closed-form Betti bounds and the corpus verifier.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, BettiTable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::height;
use crate::ideal_file::IdealFile;
use crate::json::serialize_big;
use crate::with_field;

fn tower(h: u64, e: u64) -> BigUint {
    let e = u32::try_from(e).expect("bound exponent exceeds u32");
    BigUint::from(h).pow(e)
}

fn two_pow(k: u32) -> u64 {
    1u64.checked_shl(k).filter(|v| *v != 0 && k < 63).expect("bound exponent overflows")
}

/// `C(n, k)` for a big `n` and small `k`.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    let mut r = BigUint::one();
    for t in 0..k {
        let t = BigUint::from(t);
        if &t >= n {
            return BigUint::zero();
        }
        r = r * (n - &t) / (t + 1u32);
    }
    r
}

/// `h^(2^(j+1) - 3)`, and `1` for `j = 0`.
///
/// # Panics
/// If the exponent does not fit in `u32`.
pub fn bound_a(h: u64, j: u32) -> BigUint {
    if j == 0 {
        return BigUint::one();
    }
    tower(h, two_pow(j + 1) - 3)
}

/// `2h^2 + h`.
pub fn bound_b(h: u64) -> BigUint {
    let h = BigUint::from(h);
    &h * &h * 2u32 + h
}

/// `C(h+1, 2)`.
pub fn castelnuovo(h: u64) -> BigUint {
    binomial(&BigUint::from(h + 1), 2)
}

/// `C(h^(2^(a+j+1) - 3), i+1)`.
pub fn bound_prop47(h: u64, a: u32, i: u32, j: u32) -> BigUint {
    binomial(&tower(h, two_pow(a + j + 1) - 3), u64::from(i) + 1)
}

/// `C(h^(2^(j+h) - 2), i+2)` for `h >= 2`.
pub fn bound_thm48(h: u64, i: u32, j: u32) -> Result<BigUint> {
    if h < 2 {
        return Err(Error::Precondition(format!("bound_thm48 needs h >= 2 (got {h})")));
    }
    let k = u32::try_from(h).ok().and_then(|h| h.checked_add(j)).ok_or_else(|| {
        Error::Resource(format!("bound_thm48 exponent 2^({j}+{h}) is out of range"))
    })?;
    if k >= 32 {
        return Err(Error::Resource(format!("bound_thm48 exponent 2^{k} is out of range")));
    }
    Ok(binomial(&tower(h, two_pow(k) - 2), u64::from(i) + 2))
}

/// One comparison `computed <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub i: u32,
    pub j: u32,
    #[serde(serialize_with = "serialize_big")]
    pub computed: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub bound: BigUint,
    pub bound_name: &'static str,
    pub ok: bool,
}

impl BoundCheck {
    pub fn new(i: u32, j: u32, computed: u64, bound: BigUint, bound_name: &'static str) -> Self {
        let computed = BigUint::from(computed);
        BoundCheck {
            i,
            j,
            ok: computed <= bound,
            computed,
            bound,
            bound_name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CastelnuovoNote {
    pub beta02: u64,
    #[serde(serialize_with = "serialize_big")]
    pub bound: BigUint,
    pub exceeded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegressionCheck {
    pub j: u32,
    pub expected: u64,
    pub computed: Option<u64>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportError {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub instance: String,
    pub field: String,
    pub h: Option<u32>,
    pub bigheight: Option<u32>,
    /// Always `"declared"` when present: bigheight is taken from metadata.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bigheight_source: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nondegenerate: Option<bool>,
    pub checks: Vec<BoundCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub castelnuovo: Option<CastelnuovoNote>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub regression: Vec<RegressionCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ReportError>,
    pub elapsed_ms: u64,
}

impl BoundReport {
    fn failed(instance: &str, file: &IdealFile, e: &Error) -> Self {
        BoundReport {
            instance: instance.to_string(),
            field: file.field().to_string(),
            h: None,
            bigheight: file.metadata.bigheight,
            bigheight_source: file.metadata.bigheight.map(|_| "declared"),
            nondegenerate: None,
            checks: Vec::new(),
            castelnuovo: None,
            regression: Vec::new(),
            betti: None,
            error: Some(ReportError {
                kind: e.kind(),
                message: e.to_string(),
            }),
            elapsed_ms: 0,
        }
    }

    pub fn ok(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.ok) && self.regression.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Expected `beta_{0,j}` per instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub expected_beta0: BTreeMap<String, BTreeMap<u32, u64>>,
}

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub id: String,
    pub file: IdealFile,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub items: Vec<CorpusItem>,
    pub manifest: Manifest,
}

/// Reads every `*.json` in `dir` (sorted by name) plus `manifest.json`.
pub fn load_corpus(dir: impl AsRef<Path>) -> Result<Corpus> {
    let dir = dir.as_ref();
    let io = |e: std::io::Error| Error::Input(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .collect::<std::io::Result<Vec<_>>>()
        .map_err(io)?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut corpus = Corpus::default();
    for p in paths {
        let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
        if stem == "manifest" {
            let src = std::fs::read_to_string(&p).map_err(io)?;
            corpus.manifest = serde_json::from_str(&src)
                .map_err(|e| Error::Input(format!("{}: manifest schema error: {e}", p.display())))?;
            continue;
        }
        let file = IdealFile::read(&p)?;
        let id = file.name.clone().unwrap_or(stem);
        if corpus.items.iter().any(|it| it.id == id) {
            return Err(Error::Input(format!("duplicate corpus instance '{id}'")));
        }
        corpus.items.push(CorpusItem { id, file });
    }
    if let Some(id) = corpus
        .manifest
        .expected_beta0
        .keys()
        .find(|k| !corpus.items.iter().any(|it| &&it.id == k))
    {
        return Err(Error::Input(format!("manifest names unknown instance '{id}'")));
    }
    Ok(corpus)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyConfig {
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
    /// Record wall-clock time; reports are byte-identical across runs
    /// only without it.
    pub timing: bool,
    /// Include the computed Betti table in each report.
    pub tables: bool,
}

fn verify_in<F: Field>(id: &str, file: &IdealFile, expected: Option<&BTreeMap<u32, u64>>, tables: bool) -> Result<BoundReport> {
    let gens = file.polys::<F>()?;
    let declared = file.ring.h;
    let computed_h = height(&gens)?;
    if computed_h != declared as i64 {
        return Err(Error::Precondition(format!(
            "declared height {declared} but the ideal has height {computed_h}"
        )));
    }
    let h = declared as u64;
    let meta = &file.metadata;
    let win = file.window;
    let mut max_j = win.max_j;
    if let Some(e) = expected {
        max_j = max_j.max(e.keys().copied().max().unwrap_or(0));
    }
    let table = betti_table(&gens, win.max_i, max_j)?;
    let beta = |i: u32, j: u32| table.get(i, j).unwrap_or(0);
    let mut checks = Vec::new();

    let beta01 = beta(0, 1);
    let nondegenerate = beta01 == 0;
    if meta.nondegenerate.is_some_and(|d| d != nondegenerate) {
        return Err(Error::Precondition(format!(
            "declared nondegenerate = {} but beta_01 = {beta01}",
            !nondegenerate
        )));
    }
    if meta.radical_unmixed() {
        for j in 0..=win.max_j {
            checks.push(BoundCheck::new(0, j, beta(0, j), bound_a(h, j), "bound_A"));
        }
        if nondegenerate && win.max_j >= 2 {
            checks.push(BoundCheck::new(0, 2, beta(0, 2), bound_b(h), "bound_B"));
        }
    }
    let castelnuovo = (nondegenerate && win.max_j >= 2).then(|| {
        let bound = castelnuovo(h);
        let beta02 = beta(0, 2);
        CastelnuovoNote {
            exceeded: BigUint::from(beta02) > bound,
            beta02,
            bound,
        }
    });
    if meta.complete_intersection {
        for j in 1..=win.max_j {
            checks.push(BoundCheck::new(0, j, beta(0, j), BigUint::from(h), "complete_intersection"));
        }
    }
    if let Some(bh) = meta.bigheight {
        if (bh as usize) < declared {
            return Err(Error::Precondition(format!(
                "declared bigheight {bh} is below the height {declared}"
            )));
        }
        if (meta.radical || meta.prime) && bh >= 2 {
            for i in 0..=win.max_i {
                for j in 0..=win.max_j.saturating_sub(i) {
                    let computed = table.get_le(i, i + j).unwrap_or(0);
                    checks.push(BoundCheck::new(i, j, computed, bound_thm48(u64::from(bh), i, j)?, "bound_thm48"));
                }
            }
        }
    }
    let regression = expected
        .map(|e| {
            e.iter()
                .map(|(&j, &v)| {
                    let c = table.get(0, j);
                    RegressionCheck {
                        j,
                        expected: v,
                        computed: c,
                        ok: c == Some(v),
                    }
                })
                .collect()
        })
        .unwrap_or_default();
    Ok(BoundReport {
        instance: id.to_string(),
        field: file.field().to_string(),
        h: Some(declared as u32),
        bigheight: meta.bigheight,
        bigheight_source: meta.bigheight.map(|_| "declared"),
        nondegenerate: Some(nondegenerate),
        checks,
        castelnuovo,
        regression,
        betti: tables.then(|| table.restrict(win.max_i, win.max_j)),
        error: None,
        elapsed_ms: 0,
    })
}

/// Verifies one item; computation errors become failed reports.
pub fn verify_item(item: &CorpusItem, expected: Option<&BTreeMap<u32, u64>>, cfg: &VerifyConfig) -> BoundReport {
    let start = Instant::now();
    let file = &item.file;
    let res = with_field!(file.field(), K => verify_in::<K>(&item.id, file, expected, cfg.tables));
    let mut report = res.unwrap_or_else(|e| BoundReport::failed(&item.id, file, &e));
    if cfg.timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    report
}

/// Reports in corpus order.
pub fn verify_corpus(corpus: &Corpus, cfg: &VerifyConfig) -> Result<Vec<BoundReport>> {
    let run = || {
        corpus
            .items
            .par_iter()
            .map(|it| verify_item(it, corpus.manifest.expected_beta0.get(&it.id), cfg))
            .collect::<Vec<_>>()
    };
    if cfg.jobs == 0 {
        return Ok(run());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
    Ok(pool.install(run))
}
