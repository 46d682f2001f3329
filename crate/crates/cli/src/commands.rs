use serde_json::{json, Value};
use thiserror::Error;

use circtrans::charpoly::charpoly_exact;
use circtrans::circulant::{build_strong_stack, enumerate_states, StateSet};
use circtrans::factor::{factorize, table_row, FactorizationReport, PieceStatus, TableRow, TABLE_HEADER};
use circtrans::galois::{quartic_galois, GaloisReport};
use circtrans::oracle::brute_independence_polynomial;
use circtrans::spectral::{spectral_report, SpectralReport};
use circtrans::symmetry::{
    decompose, dihedral_orbits, multiplicity_accounting, orbit_transfer, rotation_orbits, sector_traces, GroupKind,
    OrbitDecomposition, OrbitMatrix,
};
use circtrans::transfer::{build_transfer, independence_polynomial, TransferMatrix, WeightedTransfer};
use circtrans::IntPoly;

use crate::config::RunConfig;
use crate::output::{matrix_rows, residues_of, set_string, Doc};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Config(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<circtrans::Error> for CliError {
    fn from(e: circtrans::Error) -> Self {
        use circtrans::Error as E;
        match e {
            E::InvalidSpec(_) | E::InvalidArgument(_) | E::Unsupported(_) | E::NotPrime(_) | E::Parse(_) | E::Shape(_) => {
                CliError::Config(e.to_string())
            }
            E::CapExceeded(_) => CliError::Cap(e.to_string()),
            E::Arithmetic(_) | E::NoConvergence { .. } | E::Structural(_) => CliError::Failure(e.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, CliError>;

/// Rendered output plus the flags that decide the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub doc: Doc,
    pub mismatch: bool,
    pub unresolved: bool,
}

impl Outcome {
    pub fn ok(doc: Doc) -> Self {
        Outcome { doc, mismatch: false, unresolved: false }
    }
}

pub struct Setup {
    pub states: StateSet,
    pub t: TransferMatrix,
}

pub fn setup(cfg: &RunConfig) -> Result<Setup, CliError> {
    let states = enumerate_states(&cfg.spec);
    let t = build_transfer(&states, &cfg.spec.kernel())?;
    Ok(Setup { states, t })
}

fn require_prime(cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.spec.is_prime_order() {
        Ok(())
    } else {
        Err(CliError::Config(format!("this command needs an odd prime n, got {}", cfg.n)))
    }
}

pub fn states(cfg: &RunConfig) -> CmdResult {
    let s = enumerate_states(&cfg.spec);
    let list: Vec<Value> = s
        .states()
        .iter()
        .zip(s.weights())
        .enumerate()
        .map(|(i, (&m, &w))| json!({ "index": i, "residues": residues_of(m), "weight": w }))
        .collect();
    let rows = s
        .states()
        .iter()
        .zip(s.weights())
        .enumerate()
        .map(|(i, (&m, &w))| vec![i.to_string(), set_string(m), w.to_string()])
        .collect();
    let hist = s.weight_histogram();
    let doc = Doc::new(json!({ "count": s.len(), "weight_histogram": hist, "states": list }))
        .line("states", s.len())
        .line("weight histogram", format!("{hist:?}"))
        .table(&["index", "state", "weight"], rows);
    Ok(Outcome::ok(doc))
}

fn orbit_json(dec: &OrbitDecomposition) -> Value {
    let orbits: Vec<Value> = dec
        .orbits
        .iter()
        .map(|o| {
            json!({
                "representative": residues_of(o.representative),
                "size": o.size(),
                "weight": o.weight,
                "rotation_orbit_size": o.rotation_orbit_size,
                "reflection_closed": o.reflection_closed,
            })
        })
        .collect();
    json!({ "group": dec.kind, "count": dec.len(), "orbits": orbits })
}

fn orbit_rows(dec: &OrbitDecomposition) -> Vec<Vec<String>> {
    dec.orbits
        .iter()
        .enumerate()
        .map(|(i, o)| {
            vec![
                i.to_string(),
                set_string(o.representative),
                o.size().to_string(),
                o.weight.to_string(),
                if o.reflection_closed { "no" } else { "yes" }.to_string(),
            ]
        })
        .collect()
}

pub fn orbits(cfg: &RunConfig, kind: GroupKind) -> CmdResult {
    let s = enumerate_states(&cfg.spec);
    let dec = decompose(&s, kind)?;
    let mut result = orbit_json(&dec);
    let mut doc_lines = vec![("orbits".to_string(), dec.len().to_string())];
    if cfg.spec.is_prime_order() {
        let m = multiplicity_accounting(&s)?;
        doc_lines.push(("m_chi0, m_chi1, m_rho".into(), format!("{}, {}, {}", m.m_chi0, m.m_chi1, m.m_rho)));
        result["multiplicities"] = json!(m);
    }
    let mut doc = Doc::new(result).table(&["orbit", "representative", "size", "weight", "chiral"], orbit_rows(&dec));
    doc.summary = doc_lines;
    Ok(Outcome::ok(doc))
}

fn orbit_matrix_json(orb: &OrbitMatrix) -> Value {
    json!({
        "sizes": orb.sizes(),
        "weights": orb.weights(),
        "counts": matrix_rows(orb.counts()),
        "size_symmetric": orb.is_size_symmetric(),
    })
}

pub fn transfer(cfg: &RunConfig) -> CmdResult {
    let Setup { states, t } = setup(cfg)?;
    let dec = dihedral_orbits(&states)?;
    let orb = orbit_transfer(&dec, &cfg.spec.kernel())?;
    let bits: Vec<String> =
        (0..t.dimension()).map(|i| (0..t.dimension()).map(|j| if t.get(i, j) { '1' } else { '0' }).collect()).collect();
    let mut rows = matrix_rows(orb.counts());
    for (r, o) in rows.iter_mut().zip(&dec.orbits) {
        r.insert(0, set_string(o.representative));
    }
    let mut header = vec!["orbit".to_string()];
    header.extend(dec.orbits.iter().map(|o| set_string(o.representative)));
    let mut doc = Doc::new(json!({
        "dimension": t.dimension(),
        "ones": t.ones(),
        "row_sums": t.row_sums(),
        "rows": bits,
        "orbit_matrix": orbit_matrix_json(&orb),
    }))
    .line("dimension", t.dimension())
    .line("nonzero entries", t.ones())
    .line("orbit dimension", orb.dimension());
    doc.header = header;
    doc.rows = rows;
    Ok(Outcome::ok(doc))
}

pub fn indpoly(cfg: &RunConfig) -> CmdResult {
    let Setup { t, .. } = setup(cfg)?;
    let wt = WeightedTransfer::new(&t);
    let p = independence_polynomial(&t, &wt, cfg.d, cfg.boundary())?;
    let mut result = json!({
        "coefficients": p.coefficients,
        "alpha": p.alpha(),
        "value_at_one": p.value_at_one().to_string(),
        "leading": p.leading().to_string(),
    });
    let mut mismatch = false;
    let mut doc_lines = vec![
        ("I(x)".to_string(), p.coefficients.to_string()),
        ("I(1)".to_string(), p.value_at_one().to_string()),
        ("alpha".to_string(), p.alpha().to_string()),
        ("maximum sets".to_string(), p.leading().to_string()),
    ];
    if cfg.level >= crate::config::Level::Oracle {
        let g = build_strong_stack(&cfg.spec, cfg.d, cfg.boundary())?;
        let o = brute_independence_polynomial(&g, cfg.oracle_cap)?;
        let equal = o.coefficients == p.coefficients;
        mismatch = !equal;
        result["oracle"] = json!({ "vertex_count": o.vertex_count, "coefficients": o.coefficients, "equal": equal });
        doc_lines.push(("oracle".into(), if equal { "agrees".into() } else { format!("MISMATCH {}", o.coefficients) }));
    }
    let rows = p.coefficients.coeffs().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect();
    let mut doc = Doc::new(result).table(&["k", "coefficient"], rows);
    doc.summary = doc_lines;
    Ok(Outcome { doc, mismatch, unresolved: false })
}

pub fn charpoly(cfg: &RunConfig) -> CmdResult {
    let Setup { states, t } = setup(cfg)?;
    let chi = charpoly_exact(&t.to_int_matrix())?;
    let orb = orbit_transfer(&dihedral_orbits(&states)?, &cfg.spec.kernel())?;
    let chi_orb = charpoly_exact(orb.counts())?;
    let (nu, _) = chi.split_zero_root();
    let doc = Doc::new(json!({
        "dimension": t.dimension(),
        "chi_t": chi,
        "zero_multiplicity": nu,
        "orbit_dimension": orb.dimension(),
        "chi_orbit": chi_orb,
    }))
    .line("chi_T", &chi)
    .line("zero multiplicity", nu)
    .line("chi_orb", &chi_orb);
    Ok(Outcome::ok(doc))
}

pub struct Factored {
    pub report: FactorizationReport,
    pub row: TableRow,
}

impl Factored {
    pub fn unresolved(&self) -> bool {
        self.row.pieces.iter().any(|p| p.status == PieceStatus::Unresolved)
    }

    pub fn json(&self) -> Value {
        json!({ "factorization": self.report, "table_row": self.row, "table_tsv": self.row.tsv() })
    }
}

pub fn run_factorization(cfg: &RunConfig) -> Result<Factored, CliError> {
    require_prime(cfg)?;
    let report = factorize(&cfg.spec)?;
    let row = table_row(&report)?;
    Ok(Factored { report, row })
}

pub fn factor(cfg: &RunConfig) -> CmdResult {
    let f = run_factorization(cfg)?;
    let r = &f.report;
    let mut doc = Doc::new(f.json())
        .line("nu", r.nu)
        .line("f_anom", &r.f_anom)
        .line("f_trivial", &r.f_trivial)
        .line("f_sign", &r.f_sign)
        .line("f_cyc", &r.f_cyc)
        .line("K-pattern", &f.row.k_pattern)
        .line("f_anom factors", &f.row.f_anom)
        .line("consistent", r.routes_agree && r.reconstruction_holds && r.degree_accounting_holds);
    doc.header = TABLE_HEADER.split('\t').map(str::to_string).collect();
    doc.rows = vec![f.row.tsv().split('\t').map(str::to_string).collect()];
    let mismatch = !(r.routes_agree && r.reconstruction_holds && r.degree_accounting_holds);
    Ok(Outcome { doc, mismatch, unresolved: f.unresolved() })
}

/// Galois reports for `explicit`, or else for the quartic pieces of
/// `f_anom` (factorizing unless `factored` is supplied).
pub fn galois_reports(
    cfg: &RunConfig,
    explicit: Option<&IntPoly>,
    factored: Option<&Factored>,
) -> Result<(Vec<GaloisReport>, bool), CliError> {
    let field = (cfg.spec.is_cycle() && cfg.spec.is_prime_order()).then_some(cfg.n);
    let quartic_pieces =
        |f: &Factored| f.row.pieces.iter().filter(|p| p.poly.degree() == Some(4)).map(|p| p.poly.clone()).collect();
    let quartics: Vec<IntPoly> = match (explicit, factored) {
        (Some(p), _) => vec![p.clone()],
        (None, Some(f)) => quartic_pieces(f),
        (None, None) => quartic_pieces(&run_factorization(cfg)?),
    };
    let mut unresolved = false;
    let mut out = Vec::new();
    for q in &quartics {
        let rep = quartic_galois(q, field, &cfg.primes)?;
        unresolved |= matches!(rep.verdict, circtrans::factor::Verdict::Unresolved { .. });
        out.push(rep);
    }
    Ok((out, unresolved))
}

pub fn galois(cfg: &RunConfig, poly: Option<&str>) -> CmdResult {
    let explicit = match poly {
        Some(s) => {
            let parts: Vec<&str> = s.split(',').map(str::trim).collect();
            Some(IntPoly::from_strings(&parts).map_err(|e| CliError::Config(e.to_string()))?)
        }
        None => None,
    };
    let (reports, unresolved) = galois_reports(cfg, explicit.as_ref(), None)?;
    let mut doc = Doc::new(json!({ "quartics": reports }));
    if reports.is_empty() {
        doc = doc.line("quartics", "none among the factors of f_anom");
    }
    for r in &reports {
        doc = doc
            .line("polynomial", &r.polynomial)
            .line("group", r.group.map_or("none".to_string(), |g| g.to_string()))
            .line("discriminant", &r.discriminant)
            .line("resolvent", &r.resolvent)
            .line("justification", &r.justification);
        for m in &r.modp {
            doc = doc.line(&format!("mod {}", m.p), format!("roots {:?}, degrees {:?}", m.roots, m.degree_pattern));
        }
    }
    Ok(Outcome { doc, mismatch: false, unresolved })
}

pub fn run_spectral(cfg: &RunConfig) -> Result<SpectralReport, CliError> {
    let Setup { states, t } = setup(cfg)?;
    let orb = orbit_transfer(&dihedral_orbits(&states)?, &cfg.spec.kernel())?;
    Ok(spectral_report(&t, &orb, cfg.horizon, cfg.tolerance, cfg.iteration_cap)?)
}

pub fn spectral(cfg: &RunConfig) -> CmdResult {
    let r = run_spectral(cfg)?;
    let rows = r
        .growth_samples
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let ratio = if i == 0 { String::new() } else { format!("{:.12}", r.growth_ratios[i - 1]) };
            vec![(i + 1).to_string(), format!("{g:.12}"), ratio]
        })
        .collect();
    let doc = Doc::new(json!(r))
        .line("rho(T)", format!("{:.12}", r.rho_t))
        .line("rho(T_orb)", format!("{:.12}", r.rho_orbit))
        .line("iterations", r.iterations_t)
        .line("Perron vector min", format!("{:.6e}", r.perron_vector_min))
        .line("rho(T)^(1/n)", format!("{:.12}", r.capacity_stat))
        .line("note", r.capacity_caveat)
        .table(&["d", "I(strip d, 1)^(1/d)", "I(d)/I(d-1)"], rows);
    Ok(Outcome::ok(doc))
}

pub fn report(cfg: &RunConfig) -> CmdResult {
    require_prime(cfg)?;
    let Setup { states, t: _ } = setup(cfg)?;
    let kernel = cfg.spec.kernel();
    let dec = dihedral_orbits(&states)?;
    let orb = orbit_transfer(&dec, &kernel)?;
    let f = run_factorization(cfg)?;
    let sectors = sector_traces(&rotation_orbits(&states)?, &kernel, cfg.d)?;
    let spectral = run_spectral(cfg)?;
    let (galois, galois_unresolved) = galois_reports(cfg, None, Some(&f))?;
    let consistent = f.report.routes_agree && f.report.reconstruction_holds && f.report.degree_accounting_holds;
    let doc = Doc::new(json!({
        "states": states.len(),
        "weight_histogram": states.weight_histogram(),
        "orbits": orbit_json(&dec),
        "multiplicities": multiplicity_accounting(&states)?,
        "orbit_matrix": orbit_matrix_json(&orb),
        "factorization": f.json(),
        "sectors": {
            "d": sectors.d,
            "anomalous": sectors.anomalous,
            "cyclotomic": sectors.cyclotomic,
            "total": sectors.total(),
        },
        "spectral": spectral,
        "galois": galois,
    }))
    .line("states", states.len())
    .line("orbits", dec.len())
    .line("nu", f.report.nu)
    .line("f_anom", &f.report.f_anom)
    .line("f_cyc", &f.report.f_cyc)
    .line("table row", f.row.tsv().replace('\t', " | "))
    .line(&format!("I_anom (d = {})", cfg.d), &sectors.anomalous)
    .line(&format!("I_cyc (d = {})", cfg.d), &sectors.cyclotomic)
    .line("rho(T)", format!("{:.12}", spectral.rho_t));
    Ok(Outcome { doc, mismatch: !consistent, unresolved: f.unresolved() || galois_unresolved })
}
