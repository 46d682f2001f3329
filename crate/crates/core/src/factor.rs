//! The factorization `χ_T = λ^ν · f_anom · f_cyc²`, rational-root and
//! degree-pattern irreducibility tests, and the small-primes table.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::charpoly::charpoly_exact;
use crate::circulant::{enumerate_states, CirculantSpec};
use crate::cyclotomic::charpoly_cyclotomic_modular;
use crate::error::{Error, Result};
use crate::ffpoly::{factor_mod_p, FpPoly};
use crate::modp::{large_primes, small_primes};
use crate::poly::{poly_square_root, Poly};
use crate::symmetry::{dihedral_orbits, fourier_block, orbit_transfer, rotation_orbits};
use crate::transfer::build_transfer;
use crate::{CycPoly, IntPoly, RatPoly};

pub const DEFAULT_SIEVE_PRIMES: usize = 25;

// ---------------------------------------------------------------------------
// Rational polynomial helpers

fn rat_gcd(a: &RatPoly, b: &RatPoly) -> Result<RatPoly> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.divrem(&b)?;
        a = b;
        b = r;
    }
    match a.leading().cloned() {
        Some(l) => Ok(a.scale(&l.recip())),
        None => Ok(a),
    }
}

/// Integer multiple of `f` with coprime coefficients and positive leading
/// coefficient.
pub fn primitive_part(f: &RatPoly) -> IntPoly {
    let denom = f.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * BigRational::from_integer(denom.clone())).to_integer()).collect();
    let g = Poly::new(ints);
    let mut content = g.content();
    if g.leading().is_some_and(Signed::is_negative) {
        content = -content;
    }
    if content.is_zero() {
        return g;
    }
    g.map(|c| c / &content)
}

/// Exact quotient `f / g` over the rationals, returned primitive.
fn exact_quotient(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    let (q, r) = f.divrem_rational(g)?;
    if !r.is_zero() {
        return Err(Error::Arithmetic("division leaves a remainder".into()));
    }
    Ok(primitive_part(&q))
}

/// `disc(f) = (-1)^{m(m-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let m = f.degree().ok_or_else(|| Error::InvalidArgument("discriminant of zero".into()))?;
    if m == 0 {
        return Ok(BigInt::one());
    }
    let res = resultant(&f.to_rational(), &f.derivative().to_rational())?;
    let mut d = res / BigRational::from_integer(f.leading().unwrap().clone());
    if (m * (m - 1) / 2) % 2 == 1 {
        d = -d;
    }
    if !d.is_integer() {
        return Err(Error::Structural("discriminant is not integral".into()));
    }
    Ok(d.to_integer())
}

/// Resultant by the Euclidean recursion over `Q`.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> Result<BigRational> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Ok(BigRational::zero());
    };
    if n == 0 {
        return Ok(num_traits::pow(g.coeff(0), m));
    }
    let (_, r) = f.divrem(g)?;
    let sign = if (m * n) % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    let Some(dr) = r.degree() else {
        return Ok(BigRational::zero());
    };
    let lc = g.leading().unwrap().clone();
    Ok(sign * num_traits::pow(lc, m - dr) * resultant(g, &r)?)
}

fn squarefree_mod_p(f: &IntPoly, p: u64) -> Result<Option<FpPoly>> {
    let fp = FpPoly::from_int_poly(f, p)?;
    if fp.degree() != f.degree() {
        return Ok(None);
    }
    let g = fp.gcd(&fp.derivative());
    Ok(g.is_one().then_some(fp))
}

// ---------------------------------------------------------------------------
// Rational roots

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Distinct integer roots of a monic integer polynomial by Hensel lifting
/// roots modulo a prime past the Cauchy bound.
fn integer_roots_monic(g: &IntPoly) -> Result<Vec<BigInt>> {
    let Some(deg) = g.degree() else {
        return Err(Error::InvalidArgument("roots of the zero polynomial".into()));
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    let gr = g.to_rational();
    let common = rat_gcd(&gr, &gr.derivative())?;
    let s = if common.degree() == Some(0) {
        g.clone()
    } else {
        let (q, _) = gr.divrem(&common)?;
        q.to_integer().ok_or_else(|| Error::Structural("squarefree part is not integral".into()))?
    };
    let bound: BigInt = s.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default() + 1;
    let limit = &bound * 2;
    let mut chosen = None;
    for p in large_primes().take(200) {
        if let Some(fp) = squarefree_mod_p(&s, p)? {
            chosen = Some((p, fp));
            break;
        }
    }
    let (p, fp) = chosen.ok_or_else(|| Error::Structural("no prime keeps the polynomial squarefree".into()))?;
    let ds = s.derivative();
    let mut roots = Vec::new();
    for r0 in factor_mod_p(&fp)?.roots() {
        let mut m = BigInt::from(p);
        let mut r = BigInt::from(r0);
        while m <= limit {
            m = &m * &m;
            let Some(inv) = mod_inverse(&ds.eval(&r), &m) else { break };
            r = (&r - s.eval(&r) * inv).mod_floor(&m);
        }
        if &r * 2 > m {
            r -= &m;
        }
        if s.eval(&r).is_zero() {
            roots.push(r);
        }
    }
    roots.sort();
    Ok(roots)
}

/// Distinct rational roots of an integer polynomial.
pub fn rational_roots(f: &IntPoly) -> Result<Vec<BigRational>> {
    let (k, rest) = f.split_zero_root();
    let mut out = Vec::new();
    if k > 0 {
        out.push(BigRational::zero());
    }
    let Some(d) = rest.degree() else { return Ok(out) };
    if d == 0 {
        return Ok(out);
    }
    // g(y) = lc^{d-1} f(y / lc) is monic.
    let lc = rest.leading().unwrap().clone();
    let mut g: Vec<BigInt> = Vec::with_capacity(d + 1);
    for i in 0..d {
        g.push(rest.coeff(i) * num_traits::pow(lc.clone(), d - 1 - i));
    }
    g.push(BigInt::one());
    for y in integer_roots_monic(&Poly::new(g))? {
        out.push(BigRational::new(y, lc.clone()));
    }
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Irreducibility sieve

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Irreducible { primes: Vec<u64> },
    Factored { parts: Vec<IntPoly> },
    Unresolved { primes: Vec<u64> },
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Verdict::Irreducible { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SieveResult {
    pub verdict: Verdict,
    /// Degree pattern of every prime that was used.
    pub patterns: Vec<(u64, Vec<usize>)>,
}

/// The first `count` primes at which `f` keeps its degree and stays
/// squarefree.
pub fn default_sieve_primes(f: &IntPoly, count: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    for p in small_primes(2000) {
        if out.len() == count {
            break;
        }
        if squarefree_mod_p(f, p)?.is_some() {
            out.push(p);
        }
    }
    Ok(out)
}

/// Rational-root test, then trial division by `candidates`, then the
/// intersection of achievable factor-degree sums over `primes`.
pub fn irreducibility_sieve(f: &IntPoly, primes: &[u64], candidates: &[IntPoly]) -> Result<SieveResult> {
    let deg = f.degree().ok_or_else(|| Error::InvalidArgument("sieve of the zero polynomial".into()))?;
    if deg == 0 {
        return Err(Error::InvalidArgument("sieve of a constant".into()));
    }
    let done = |verdict| Ok(SieveResult { verdict, patterns: Vec::new() });
    if deg == 1 {
        return done(Verdict::Irreducible { primes: Vec::new() });
    }
    if let Some(r) = rational_roots(f)?.into_iter().next() {
        let linear = Poly::new(vec![-r.numer().clone(), r.denom().clone()]);
        let q = exact_quotient(f, &linear)?;
        return done(Verdict::Factored { parts: vec![linear, q] });
    }
    let fr = f.to_rational();
    let common = rat_gcd(&fr, &fr.derivative())?;
    if common.degree().is_some_and(|d| d > 0) {
        let g = primitive_part(&common);
        let q = exact_quotient(f, &g)?;
        return done(Verdict::Factored { parts: vec![g, q] });
    }
    for c in candidates {
        if c.degree().is_some_and(|d| d > 0 && d < deg) {
            let (_, r) = f.divrem_rational(c)?;
            if r.is_zero() {
                let q = exact_quotient(f, c)?;
                return done(Verdict::Factored { parts: vec![c.clone(), q] });
            }
        }
    }
    let mut feasible = vec![true; deg + 1];
    let mut used = Vec::new();
    let mut patterns = Vec::new();
    for &p in primes {
        let Some(fp) = squarefree_mod_p(f, p)? else { continue };
        let pattern = factor_mod_p(&fp)?.degree_pattern();
        let mut sums = vec![false; deg + 1];
        sums[0] = true;
        for &k in &pattern {
            for s in (k..=deg).rev() {
                if sums[s - k] {
                    sums[s] = true;
                }
            }
        }
        for (f, s) in feasible.iter_mut().zip(&sums) {
            *f &= *s;
        }
        used.push(p);
        patterns.push((p, pattern));
        if feasible[1..deg].iter().all(|&b| !b) {
            return Ok(SieveResult { verdict: Verdict::Irreducible { primes: used }, patterns });
        }
    }
    Ok(SieveResult { verdict: Verdict::Unresolved { primes: used }, patterns })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PieceStatus {
    Irreducible,
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Piece {
    pub poly: IntPoly,
    pub status: PieceStatus,
}

/// Splits `f` into pieces that the sieve certifies irreducible or cannot
/// split further.
pub fn decompose(f: &IntPoly, candidates: &[IntPoly]) -> Result<Vec<Piece>> {
    let mut out = Vec::new();
    let mut stack = vec![f.clone()];
    while let Some(g) = stack.pop() {
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let primes = default_sieve_primes(&g, DEFAULT_SIEVE_PRIMES)?;
        match irreducibility_sieve(&g, &primes, candidates)?.verdict {
            Verdict::Irreducible { .. } => out.push(Piece { poly: g, status: PieceStatus::Irreducible }),
            Verdict::Unresolved { .. } => out.push(Piece { poly: g, status: PieceStatus::Unresolved }),
            Verdict::Factored { parts } => stack.extend(parts),
        }
    }
    out.sort_by_key(|a| (a.poly.degree(), a.poly.to_string()));
    Ok(out)
}

fn compact(p: &IntPoly) -> String {
    p.to_string().replace(' ', "")
}

/// Table-style description: `(x-1)(x^2-2x-10)`, `irred. deg. 12`,
/// `(x^3+2x^2-x-1) · (irred. deg. 20)`.
pub fn describe(pieces: &[Piece]) -> String {
    let text = |p: &Piece| {
        let d = p.poly.degree().unwrap_or(0);
        match p.status {
            PieceStatus::Irreducible if d <= 4 => None,
            PieceStatus::Irreducible => Some(format!("irred. deg. {d}")),
            PieceStatus::Unresolved => Some(format!("unresolved deg. {d}")),
        }
    };
    if let [only] = pieces {
        return text(only).unwrap_or_else(|| compact(&only.poly));
    }
    let words: Vec<(bool, String)> = pieces
        .iter()
        .map(|p| match text(p) {
            Some(t) => (true, format!("({t})")),
            None => (false, format!("({})", compact(&p.poly))),
        })
        .collect();
    if words.iter().any(|(t, _)| *t) {
        words.into_iter().map(|(_, w)| w).collect::<Vec<_>>().join(" · ")
    } else {
        words.into_iter().map(|(_, w)| w).collect()
    }
}

/// `[2,2,2]` or `[10]^5` once a degree repeats four or more times.
pub fn format_pattern(pattern: &[usize]) -> String {
    if pattern.len() >= 4 && pattern.iter().all(|&d| d == pattern[0]) {
        return format!("[{}]^{}", pattern[0], pattern.len());
    }
    let parts: Vec<String> = pattern.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

// ---------------------------------------------------------------------------
// Factorization

#[derive(Clone, Debug, Serialize)]
pub struct ModeFactor {
    pub k: usize,
    pub kernel: usize,
    pub degree: usize,
    /// Power-basis rendering of each coefficient, ascending.
    pub coefficients: Vec<String>,
    pub real: bool,
    #[serde(skip)]
    pub factor: CycPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub n: usize,
    pub states: usize,
    pub nu: usize,
    pub chi_t: IntPoly,
    /// Kernel of the `k = 0` block.
    pub anomalous_kernel: usize,
    pub f_anom: IntPoly,
    /// Part of `f_anom` from the trivial character (dihedral orbit matrix).
    pub f_trivial: IntPoly,
    /// Part of `f_anom` from the sign character (chiral orbits).
    pub f_sign: IntPoly,
    pub f_cyc: IntPoly,
    pub mode_factors: Vec<ModeFactor>,
    pub k_pattern: Vec<usize>,
    pub routes_agree: bool,
    pub reconstruction_holds: bool,
    pub degree_accounting_holds: bool,
}

/// Combines `χ_T`, the `k = 0` block charpoly, the dihedral orbit-matrix
/// charpoly and the per-mode charpolys for `k = 1..(n-1)/2`.
pub fn assemble_factorization(
    n: usize,
    chi: &IntPoly,
    anomalous_block: &IntPoly,
    orbit_charpoly: &IntPoly,
    modes: &[(usize, CycPoly)],
) -> Result<FactorizationReport> {
    let dim = chi.degree().ok_or_else(|| Error::InvalidArgument("empty characteristic polynomial".into()))?;
    let (k0, f_anom) = anomalous_block.split_zero_root();
    let (_, f_trivial) = orbit_charpoly.split_zero_root();
    let f_sign = f_anom.div_exact_monic(&f_trivial).map_err(|_| {
        Error::Structural(format!("orbit-matrix factor {f_trivial} does not divide the k = 0 factor {f_anom}"))
    })?;

    let mut mode_factors = Vec::with_capacity(modes.len());
    let mut product = CycPoly::one();
    let mut nu = k0;
    for (k, chi_k) in modes {
        let (kernel, factor) = chi_k.split_zero_root();
        let real = factor.coeffs().iter().all(|c| c.is_real());
        if !real {
            return Err(Error::Structural(format!("mode {k} factor has coefficients outside K")));
        }
        nu += 2 * kernel;
        product = &product * &factor;
        mode_factors.push(ModeFactor {
            k: *k,
            kernel,
            degree: factor.degree().unwrap_or(0),
            coefficients: factor.coeffs().iter().map(|c| c.to_string()).collect(),
            real,
            factor,
        });
    }
    let route_b: Vec<BigInt> = product
        .coeffs()
        .iter()
        .map(|c| match c.to_rational() {
            Some(q) if q.is_integer() => Ok(q.to_integer()),
            _ => Err(Error::Structural(format!("mode-factor product has non-rational coefficient {c}"))),
        })
        .collect::<Result<_>>()?;
    let route_b = Poly::new(route_b);

    let (zeros, chi_rest) = chi.split_zero_root();
    if zeros != nu {
        return Err(Error::Structural(format!(
            "χ_T vanishes to order {zeros} at 0 but the blocks give ν = {nu}"
        )));
    }
    let q = chi_rest
        .div_exact_monic(&f_anom)
        .map_err(|_| Error::Structural(format!("f_anom = {f_anom} does not divide χ_T")))?;
    let route_a = poly_square_root(&q).ok_or_else(|| {
        Error::Structural(format!("χ_T / (λ^ν f_anom) is not a square; block product gives {route_b}"))
    })?;
    if route_a != route_b {
        return Err(Error::Structural(format!(
            "f_cyc disagrees: square root gives {route_a}, block product gives {route_b}"
        )));
    }
    let rebuilt = &(&f_anom * &route_a) * &route_a;
    let reconstruction_holds = rebuilt.shift(nu) == *chi;
    if !reconstruction_holds {
        return Err(Error::Structural("λ^ν f_anom f_cyc² differs from χ_T".into()));
    }
    let deg_anom = f_anom.degree().unwrap_or(0);
    let deg_cyc = route_a.degree().unwrap_or(0);
    let degree_accounting_holds = nu + deg_anom + 2 * deg_cyc == dim;
    let k_pattern = mode_factors.iter().map(|m| m.degree).collect();
    Ok(FactorizationReport {
        n,
        states: dim,
        nu,
        chi_t: chi.clone(),
        anomalous_kernel: k0,
        f_anom,
        f_trivial,
        f_sign,
        f_cyc: route_a,
        mode_factors,
        k_pattern,
        routes_agree: true,
        reconstruction_holds,
        degree_accounting_holds,
    })
}

/// Full pipeline for an odd prime `n`.
pub fn factorize(spec: &CirculantSpec) -> Result<FactorizationReport> {
    let n = spec.n();
    if !spec.is_prime_order() || n < 3 {
        return Err(Error::Unsupported(format!("factorization needs an odd prime n, got {n}")));
    }
    let states = enumerate_states(spec);
    let kernel = spec.kernel();
    let t = build_transfer(&states, &kernel)?;
    let chi = charpoly_exact(&t.to_int_matrix())?;
    let rot = rotation_orbits(&states)?;
    let b0 = fourier_block(&rot, &kernel, 0)?
        .to_int_matrix()
        .ok_or_else(|| Error::Structural("k = 0 block is not integral".into()))?;
    let b0_chi = charpoly_exact(&b0)?;
    let orb = orbit_transfer(&dihedral_orbits(&states)?, &kernel)?;
    let orb_chi = charpoly_exact(orb.counts())?;
    let mut modes = Vec::new();
    for k in 1..=(n - 1) / 2 {
        let block = fourier_block(&rot, &kernel, k)?;
        modes.push((k, charpoly_cyclotomic_modular(&block.matrix)?));
    }
    assemble_factorization(n, &chi, &b0_chi, &orb_chi, &modes)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub kernel: usize,
    pub f_anom: String,
    pub deg_f_cyc: usize,
    pub k_pattern: String,
    pub pieces: Vec<Piece>,
}

impl TableRow {
    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}\t{}", self.n, self.kernel, self.f_anom, self.deg_f_cyc, self.k_pattern)
    }
}

pub const TABLE_HEADER: &str = "n\tker\tf_anom\tdeg(f_cyc)\tf_cyc over K";

/// The sign-character part and the trivial part are decomposed separately;
/// their product is `f_anom`.
pub fn table_row(report: &FactorizationReport) -> Result<TableRow> {
    let mut pieces = decompose(&report.f_trivial, &[])?;
    pieces.extend(decompose(&report.f_sign, &[])?);
    pieces.sort_by_key(|a| (a.poly.degree(), a.poly.to_string()));
    Ok(TableRow {
        n: report.n,
        kernel: report.nu,
        f_anom: describe(&pieces),
        deg_f_cyc: report.f_cyc.degree().unwrap_or(0),
        k_pattern: format_pattern(&report.k_pattern),
        pieces,
    })
}

pub fn small_primes_table(ns: &[usize]) -> Result<Vec<TableRow>> {
    ns.iter()
        .map(|&n| factorize(&CirculantSpec::cycle(n)?).and_then(|r| table_row(&r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn rational_roots_found() {
        let f = p(&[-6, 11, -6, 1]);
        let r: Vec<String> = rational_roots(&f).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(r, vec!["1", "2", "3"]);
        let g = p(&[-1, 0, 4]);
        let r: Vec<String> = rational_roots(&g).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(r, vec!["-1/2", "1/2"]);
        assert!(rational_roots(&p(&[-2, 0, 1])).unwrap().is_empty());
        let big = &p(&[-1_000_000_007, 1]) * &p(&[3, 1]);
        assert_eq!(rational_roots(&big).unwrap().len(), 2);
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&p(&[-2, 0, 0, 0, 1])).unwrap(), BigInt::from(-2048));
        assert_eq!(discriminant(&p(&[1, 0, 0, 0, 1])).unwrap(), BigInt::from(256));
        assert_eq!(discriminant(&p(&[-10, -2, 1])).unwrap(), BigInt::from(44));
    }

    #[test]
    fn sieve_verdicts() {
        let f4 = p(&[42, 47, -29, -5, 1]);
        let primes = default_sieve_primes(&f4, DEFAULT_SIEVE_PRIMES).unwrap();
        assert!(irreducibility_sieve(&f4, &primes, &[]).unwrap().verdict.is_irreducible());
        let cubic = &p(&[-1, 1]) * &p(&[-10, -2, 1]);
        match irreducibility_sieve(&cubic, &primes, &[]).unwrap().verdict {
            Verdict::Factored { parts } => {
                assert_eq!(parts, vec![p(&[-1, 1]), p(&[-10, -2, 1])]);
            }
            v => panic!("unexpected {v:?}"),
        }
        // x^4 + 1 splits modulo every prime.
        let q = p(&[1, 0, 0, 0, 1]);
        let primes = default_sieve_primes(&q, DEFAULT_SIEVE_PRIMES).unwrap();
        assert!(matches!(irreducibility_sieve(&q, &primes, &[]).unwrap().verdict, Verdict::Unresolved { .. }));
        let sq = &p(&[1, 0, 1]) * &p(&[2, 0, 1]);
        let v = irreducibility_sieve(&sq, &primes, &[p(&[1, 0, 1])]).unwrap().verdict;
        assert_eq!(v, Verdict::Factored { parts: vec![p(&[1, 0, 1]), p(&[2, 0, 1])] });
    }

    #[test]
    fn descriptions() {
        let pieces = decompose(&(&p(&[-1, 1]) * &p(&[-10, -2, 1])), &[]).unwrap();
        assert_eq!(describe(&pieces), "(x-1)(x^2-2x-10)");
        assert_eq!(describe(&decompose(&p(&[42, 47, -29, -5, 1]), &[]).unwrap()), "x^4-5x^3-29x^2+47x+42");
        assert_eq!(format_pattern(&[2, 2, 2]), "[2,2,2]");
        assert_eq!(format_pattern(&[10; 5]), "[10]^5");
    }

    #[test]
    fn c5_and_c7_factorizations() {
        let r5 = factorize(&CirculantSpec::cycle(5).unwrap()).unwrap();
        assert_eq!(r5.nu, 4);
        assert_eq!(r5.f_anom, &p(&[-1, 1]) * &p(&[-10, -2, 1]));
        assert_eq!(r5.k_pattern, vec![1, 1]);
        let r7 = factorize(&CirculantSpec::cycle(7).unwrap()).unwrap();
        assert_eq!(r7.nu, 13);
        assert_eq!(r7.f_anom, p(&[42, 47, -29, -5, 1]));
        assert_eq!(r7.f_cyc, p(&[-13, 1, 24, -7, -9, 2, 1]));
        assert!(r7.f_sign.is_one());
        let row = table_row(&r7).unwrap();
        assert_eq!(row.tsv(), "7\t13\tx^4-5x^3-29x^2+47x+42\t6\t[2,2,2]");
    }
}
