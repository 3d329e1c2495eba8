//! Deterministic renderers for the four verbs, in text, JSON, and CSV, plus
//! the JSON table loader. Row order always follows the canonical root
//! order, so equal inputs produce byte-identical output regardless of how
//! the system was specified or how many worker threads ran.

use chevalley_core::oracle::OracleReport;
use chevalley_core::verify::SuiteReport;
use chevalley_core::{RootSystem, SignTable, StructureTable};
use serde::{Deserialize, Serialize};

use crate::args::Format;

/// One root of the inventory. `depth` is the descent depth of the root's
/// absolute value (its positive, for a negative root).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRow {
    pub index: usize,
    pub coords: Vec<i64>,
    pub coroot: Vec<i64>,
    pub sq_length: i64,
    pub height: i64,
    pub depth: usize,
}

pub fn root_rows(sys: &RootSystem) -> Vec<RootRow> {
    (0..sys.n_roots())
        .map(|idx| {
            let r = sys.root(idx);
            let abs = if sys.is_positive(idx) { idx } else { sys.negate(idx) };
            RootRow {
                index: idx,
                coords: r.coords.clone(),
                coroot: r.coroot_coords.clone(),
                sq_length: r.sq_length,
                height: r.height,
                depth: sys.depth(abs),
            }
        })
        .collect()
}

/// Per-root basis data. `c` and `segment_distance` are populated on simple
/// roots only; `k_rel` (the sign of `k_λ` against the matrix frame's
/// reference vector) only when the type has a matrix realization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRow {
    pub index: usize,
    pub gamma: i64,
    pub depth: usize,
    pub c: Option<i64>,
    pub segment_distance: Option<usize>,
    pub k_rel: Option<i64>,
}

pub fn basis_rows(sys: &RootSystem, signs: &SignTable) -> Vec<BasisRow> {
    let rel = signs.k_rel_frame();
    (0..sys.n_roots())
        .map(|idx| {
            let abs = if sys.is_positive(idx) { idx } else { sys.negate(idx) };
            let simple = sys.is_positive(idx) && idx < sys.rank();
            BasisRow {
                index: idx,
                gamma: i64::from(signs.gamma(idx)),
                depth: sys.depth(abs),
                c: simple.then(|| i64::from(sys.c_simple(idx))),
                segment_distance: simple.then(|| sys.segment_distance(idx)),
                k_rel: rel.map(|r| i64::from(r[idx])),
            }
        })
        .collect()
}

/// One canonical ordered Tits triple with its structure constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    #[serde(rename = "N")]
    pub n: i64,
}

pub fn table_rows(sys: &RootSystem, table: &StructureTable) -> Vec<TableRow> {
    table
        .canonical_rows()
        .into_iter()
        .map(|(l, m, n)| TableRow {
            lambda: sys.root(l).coords.clone(),
            mu: sys.root(m).coords.clone(),
            n,
        })
        .collect()
}

/// Rebuilds a structure table from rendered JSON rows. Each row's roots
/// must exist in the system and sum to a root; the rows become both the
/// stored constants and the canonical-triple list, which is enough to
/// answer every `structure_constant` query.
pub fn parse_table_json(sys: &RootSystem, text: &str) -> Result<StructureTable, String> {
    let rows: Vec<TableRow> =
        serde_json::from_str(text).map_err(|e| format!("table JSON does not parse: {e}"))?;
    let mut table = StructureTable::new(sys);
    for (i, row) in rows.iter().enumerate() {
        let l = sys
            .is_root(&row.lambda)
            .ok_or_else(|| format!("row {i}: lambda is not a root of this system"))?;
        let m = sys
            .is_root(&row.mu)
            .ok_or_else(|| format!("row {i}: mu is not a root of this system"))?;
        if sys.sum_index(l, m).is_none() {
            return Err(format!("row {i}: lambda + mu is not a root"));
        }
        table.insert(l, m, row.n);
        table.push_canonical(l, m);
    }
    Ok(table)
}

/// One verification suite's outcome, shaped for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl From<SuiteReport> for SuiteRow {
    fn from(r: SuiteReport) -> Self {
        SuiteRow {
            name: String::from(r.name),
            checked: r.checked,
            failures: r.failures,
            first_failure: r.first_failure,
        }
    }
}

#[derive(Debug, Serialize)]
struct OracleDoc<'a> {
    checked: usize,
    mismatches: &'a [String],
}

#[derive(Debug, Serialize)]
struct VerifyDoc<'a> {
    suites: &'a [SuiteRow],
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleDoc<'a>>,
    ok: bool,
}

fn coords_str(coords: &[i64]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(" "))
}

fn coords_csv(coords: &[i64]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    inner.join(" ")
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| String::from("-"), T::to_string)
}

fn json_doc<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Quotes a CSV field only when it needs it.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        String::from(s)
    }
}

pub fn render_roots(sys: &RootSystem, format: Format) -> String {
    let rows = root_rows(sys);
    match format {
        Format::Json => json_doc(&rows),
        Format::Csv => {
            let mut out = String::from("index,coords,coroot,sq_length,height,depth\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.index,
                    coords_csv(&r.coords),
                    coords_csv(&r.coroot),
                    r.sq_length,
                    r.height,
                    r.depth
                ));
            }
            out
        }
        Format::Text => {
            let mut out =
                String::from("index  height  sq_length  depth  coords  coroot\n");
            for r in &rows {
                out.push_str(&format!(
                    "{:>5}  {:>6}  {:>9}  {:>5}  {}  {}\n",
                    r.index,
                    r.height,
                    r.sq_length,
                    r.depth,
                    coords_str(&r.coords),
                    coords_str(&r.coroot)
                ));
            }
            out
        }
    }
}

pub fn render_basis(sys: &RootSystem, signs: &SignTable, format: Format) -> String {
    let rows = basis_rows(sys, signs);
    match format {
        Format::Json => json_doc(&rows),
        Format::Csv => {
            let mut out = String::from("index,gamma,depth,c,segment_distance,k_rel\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.index,
                    r.gamma,
                    r.depth,
                    opt_str(&r.c),
                    opt_str(&r.segment_distance),
                    opt_str(&r.k_rel)
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::from("index  gamma  depth   c   d  k_rel\n");
            for r in &rows {
                out.push_str(&format!(
                    "{:>5}  {:>5}  {:>5}  {:>2}  {:>2}  {:>5}\n",
                    r.index,
                    r.gamma,
                    r.depth,
                    opt_str(&r.c),
                    opt_str(&r.segment_distance),
                    opt_str(&r.k_rel)
                ));
            }
            out
        }
    }
}

pub fn render_table(sys: &RootSystem, table: &StructureTable, format: Format) -> String {
    let rows = table_rows(sys, table);
    match format {
        Format::Json => json_doc(&rows),
        Format::Csv => {
            let mut out = String::from("lambda,mu,N\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{}\n",
                    coords_csv(&r.lambda),
                    coords_csv(&r.mu),
                    r.n
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::from("lambda  mu  N\n");
            for r in &rows {
                out.push_str(&format!(
                    "{}  {}  {:>3}\n",
                    coords_str(&r.lambda),
                    coords_str(&r.mu),
                    r.n
                ));
            }
            out
        }
    }
}

pub fn render_verify(
    suites: &[SuiteRow],
    oracle: Option<&OracleReport>,
    ok: bool,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let doc = VerifyDoc {
                suites,
                oracle: oracle.map(|o| OracleDoc { checked: o.checked, mismatches: &o.mismatches }),
                ok,
            };
            json_doc(&doc)
        }
        Format::Csv => {
            let mut out = String::from("suite,checked,failures\n");
            for s in suites {
                out.push_str(&format!("{},{},{}\n", csv_field(&s.name), s.checked, s.failures));
            }
            if let Some(o) = oracle {
                out.push_str(&format!("oracle,{},{}\n", o.checked, o.mismatches.len()));
            }
            out
        }
        Format::Text => {
            let mut out = String::from("suite                  checked  failures\n");
            for s in suites {
                out.push_str(&format!("{:<21} {:>8} {:>9}\n", s.name, s.checked, s.failures));
                if let Some(f) = &s.first_failure {
                    out.push_str(&format!("    first failure: {f}\n"));
                }
            }
            if let Some(o) = oracle {
                out.push_str(&format!(
                    "{:<21} {:>8} {:>9}\n",
                    "oracle",
                    o.checked,
                    o.mismatches.len()
                ));
                for m in &o.mismatches {
                    out.push_str(&format!("    mismatch: {m}\n"));
                }
            }
            out.push_str(if ok { "result: PASS\n" } else { "result: FAIL\n" });
            out
        }
    }
}
