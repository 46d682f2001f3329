use clap::{Args, ValueEnum};
use serde::Serialize;

use circtrans::circulant::{Boundary, CirculantSpec};
use circtrans::oracle::DEFAULT_VERTEX_CAP;
use circtrans::spectral::{DEFAULT_HORIZON, DEFAULT_ITERATION_CAP, DEFAULT_TOLERANCE};

pub const SCHEMA_VERSION: &str = "circtrans/1";
pub const ORACLE_CAP_ENV: &str = "CIRCTRANS_ORACLE_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    None,
    Oracle,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryArg {
    Strip,
    Torus,
}

impl From<BoundaryArg> for Boundary {
    fn from(b: BoundaryArg) -> Self {
        match b {
            BoundaryArg::Strip => Boundary::Strip,
            BoundaryArg::Torus => Boundary::Torus,
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct GlobalArgs {
    /// Cycle length of the circulant.
    #[arg(long, global = true, default_value_t = 7)]
    pub n: usize,
    /// Comma-separated generators; each g stands for ±g.
    #[arg(long, global = true, default_value = "1")]
    pub connection: String,
    /// Number of layers.
    #[arg(long, global = true, default_value_t = 7)]
    pub d: usize,
    #[arg(long, global = true, value_enum, default_value_t = BoundaryArg::Torus)]
    pub boundary: BoundaryArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Defaults to `full` for `verify` and `none` elsewhere.
    #[arg(long, global = true, value_enum)]
    pub level: Option<Level>,
    /// Comma-separated primes for modular diagnostics.
    #[arg(long, global = true, default_value = "2,3,5,7,11,13")]
    pub primes: String,
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, global = true, default_value_t = DEFAULT_ITERATION_CAP)]
    pub iteration_cap: usize,
    /// Largest strip length sampled for growth statistics.
    #[arg(long, global = true, default_value_t = DEFAULT_HORIZON)]
    pub horizon: usize,
    /// Exit with status 4 when an irreducibility verdict stays unresolved.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub n: usize,
    pub connection: Vec<usize>,
    pub d: usize,
    pub boundary: BoundaryArg,
    pub format: Format,
    pub level: Level,
    pub primes: Vec<u64>,
    pub tolerance: f64,
    pub iteration_cap: usize,
    pub horizon: usize,
    pub oracle_cap: usize,
    pub strict: bool,
    #[serde(skip)]
    pub spec: CirculantSpec,
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("cannot parse {what} entry {t:?}")))
        .collect()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

impl RunConfig {
    pub fn resolve(command: &str, g: &GlobalArgs, default_level: Level) -> Result<Self, String> {
        let gens: Vec<usize> = parse_list(&g.connection, "connection")?;
        if gens.is_empty() {
            return Err("connection list is empty".into());
        }
        let spec = CirculantSpec::from_generators(g.n, &gens).map_err(|e| e.to_string())?;
        if g.d == 0 {
            return Err("d must be positive".into());
        }
        let primes: Vec<u64> = parse_list(&g.primes, "prime")?;
        if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(format!("{p} is not prime"));
        }
        if !(g.tolerance > 0.0 && g.tolerance < 1.0) {
            return Err(format!("tolerance must lie in (0, 1), got {}", g.tolerance));
        }
        if g.iteration_cap == 0 || g.horizon == 0 {
            return Err("iteration cap and horizon must be positive".into());
        }
        let oracle_cap = match std::env::var(ORACLE_CAP_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| format!("{ORACLE_CAP_ENV} must be an integer, got {v:?}"))?,
            Err(_) => DEFAULT_VERTEX_CAP,
        };
        Ok(RunConfig {
            command: command.to_string(),
            n: g.n,
            connection: spec.connection().to_vec(),
            d: g.d,
            boundary: g.boundary,
            format: g.format,
            level: g.level.unwrap_or(default_level),
            primes,
            tolerance: g.tolerance,
            iteration_cap: g.iteration_cap,
            horizon: g.horizon,
            oracle_cap,
            strict: g.strict,
            spec,
        })
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary.into()
    }
}
