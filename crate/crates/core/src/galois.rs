//! Galois groups of quartics and reductions modulo primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{default_sieve_primes, discriminant, irreducibility_sieve, rational_roots, Verdict, DEFAULT_SIEVE_PRIMES};
use crate::ffpoly::{factor_mod_p, FpPoly};
use crate::modp::is_prime;
use crate::poly::{integer_sqrt_exact, Poly};
use crate::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GaloisGroup {
    S4,
    A4,
    D4,
    C4,
    V4,
}

impl GaloisGroup {
    pub fn order(&self) -> u32 {
        match self {
            GaloisGroup::S4 => 24,
            GaloisGroup::A4 => 12,
            GaloisGroup::D4 => 8,
            GaloisGroup::C4 | GaloisGroup::V4 => 4,
        }
    }
}

impl std::fmt::Display for GaloisGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModpDiagnostics {
    pub p: u64,
    pub roots: Vec<u64>,
    pub degree_pattern: Vec<usize>,
    pub factors: Vec<(String, usize)>,
    pub squarefree: bool,
}

/// Complete factorization of `f` modulo `p`.
pub fn modp_diagnostics(f: &IntPoly, p: u64) -> Result<ModpDiagnostics> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let lc = f.leading().ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    if (lc % BigInt::from(p)).is_zero() {
        return Err(Error::InvalidArgument(format!("{p} divides the leading coefficient")));
    }
    let fac = factor_mod_p(&FpPoly::from_int_poly(f, p)?)?;
    Ok(ModpDiagnostics {
        p,
        roots: fac.roots(),
        degree_pattern: fac.degree_pattern(),
        factors: fac.factors.iter().map(|(g, e)| (g.to_string(), *e)).collect(),
        squarefree: fac.is_squarefree(),
    })
}

fn is_square(v: &BigInt) -> bool {
    !v.is_negative() && integer_sqrt_exact(v).ok().flatten().is_some()
}

/// `x^2 + b x + c` splits over `Q(√D)`.
fn splits_over(b: &BigInt, c: &BigInt, disc: &BigInt) -> bool {
    let delta = b * b - c * 4;
    is_square(&delta) || is_square(&(&delta * disc))
}

/// A factorization of a monic integer quartic into a rational linear factor
/// times a cubic or into two monic integer quadratics, if one exists.
pub fn quartic_factorization(f: &IntPoly) -> Result<Option<Vec<IntPoly>>> {
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(Error::InvalidArgument("expected a monic quartic".into()));
    }
    if !rational_roots(f)?.is_empty() {
        if let Verdict::Factored { parts } = irreducibility_sieve(f, &[], &[])?.verdict {
            return Ok(Some(parts));
        }
        return Err(Error::Structural("rational root without a linear factor".into()));
    }
    let (a, b, c, d) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    // (x^2 + p x + q)(x^2 + r x + s): q s = d, p + r = a, p r = b - q - s, p s + q r = c.
    let dm = BigInt::from(d.magnitude().clone());
    if dm.bits() > 48 {
        return Err(Error::Unsupported("constant term too large for divisor search".into()));
    }
    let mut q = BigInt::one();
    while &q * &q <= dm {
        if (&dm % &q).is_zero() {
            for qs in [q.clone(), -q.clone(), &dm / &q, -(&dm / &q)] {
                let s = &d / &qs;
                let disc = &a * &a - (&b - &qs - &s) * 4;
                let Some(root) = integer_sqrt_exact(&disc).ok().flatten() else { continue };
                for twice_p in [&a + &root, &a - &root] {
                    if twice_p.is_odd() {
                        continue;
                    }
                    let p = &twice_p / 2;
                    let r = &a - &p;
                    if &p * &s + &qs * &r == c {
                        return Ok(Some(vec![
                            Poly::new(vec![qs.clone(), p, BigInt::one()]),
                            Poly::new(vec![s, r, BigInt::one()]),
                        ]));
                    }
                }
            }
        }
        q += 1;
    }
    Ok(None)
}

pub fn quartic_is_irreducible(f: &IntPoly) -> Result<bool> {
    Ok(quartic_factorization(f)?.is_none())
}

#[derive(Clone, Debug, Serialize)]
pub struct GaloisReport {
    pub polynomial: IntPoly,
    pub verdict: Verdict,
    pub discriminant: BigInt,
    pub discriminant_is_square: bool,
    pub resolvent: IntPoly,
    pub resolvent_rational_roots: Vec<BigInt>,
    pub resolvent_irreducible: bool,
    pub group: Option<GaloisGroup>,
    pub splitting_field_degree: Option<u32>,
    pub modp: Vec<ModpDiagnostics>,
    /// Field `K = Q(cos(2π/n))` that the disjointness statement refers to.
    pub real_cyclotomic_n: Option<usize>,
    pub disjointness_deduction: bool,
    pub justification: String,
}

/// `y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2)` for
/// `f = x^4 + a x^3 + b x^2 + c x + d`.
pub fn resolvent_cubic(f: &IntPoly) -> Result<IntPoly> {
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(Error::InvalidArgument("expected a monic quartic".into()));
    }
    let (a, b, c, d) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    let c1 = &a * &c - &d * 4;
    let four = BigInt::from(4);
    let c0: BigInt = -(&a * &a * &d - &b * &d * &four + &c * &c);
    Ok(Poly::new(vec![c0, c1, -b, BigInt::one()]))
}

fn disjointness(group: Option<GaloisGroup>, disc: &BigInt, n: Option<usize>) -> (bool, String) {
    let Some(n) = n else {
        return (false, "no field K given; no disjointness claim".into());
    };
    let Some(GaloisGroup::S4) = group else {
        let label = group.map_or("undetermined".to_string(), |g| g.to_string());
        return (false, format!("group {label}: no disjointness claim"));
    };
    let half = (n - 1) / 2;
    let base = format!(
        "Gal = S4 (order 24). K = Q(cos(2π/{n})) is abelian of degree {half}, so L ∩ K is Galois over Q with a \
         cyclic group that is a quotient of S4. The normal subgroups of S4 are 1, V4, A4, S4, so the only cyclic \
         quotients have order 1 or 2; in particular S4 has no normal subgroup of index 3"
    );
    if half % 2 == 1 {
        return (true, format!("{base}. [K:Q] = {half} is odd, so L ∩ K = Q."));
    }
    // K then contains Q(√n); the quadratic subfield of L is Q(√disc).
    let shared = is_square(&(disc * BigInt::from(n)));
    if shared {
        (false, format!("{base}. Q(√disc) = Q(√{n}) lies in K, so the fields are not disjoint."))
    } else {
        (true, format!("{base}. The only quadratic subfield of L is Q(√disc) ≠ Q(√{n}), so L ∩ K = Q."))
    }
}

/// Case table on the resolvent cubic and the discriminant; `C4` against
/// `D4` by whether `x² - r x + d` and `x² + a x + (b - r)` both split over
/// `Q(√disc)`.
pub fn quartic_galois(f: &IntPoly, k_field: Option<usize>, primes: &[u64]) -> Result<GaloisReport> {
    let resolvent = resolvent_cubic(f)?;
    let factors = quartic_factorization(f)?;
    let irreducible = factors.is_none();
    // The sieve cannot certify quartics whose group has no 4-cycle; the
    // exact quadratic-split search decides those, reported with no primes.
    let verdict = match factors {
        Some(parts) => Verdict::Factored { parts },
        None => {
            let sieve_primes = default_sieve_primes(f, DEFAULT_SIEVE_PRIMES)?;
            match irreducibility_sieve(f, &sieve_primes, &[])?.verdict {
                v @ Verdict::Irreducible { .. } => v,
                _ => Verdict::Irreducible { primes: Vec::new() },
            }
        }
    };
    let disc = discriminant(f)?;
    let disc_square = is_square(&disc);
    let roots: Vec<BigInt> = rational_roots(&resolvent)?
        .into_iter()
        .filter(|q| q.is_integer())
        .map(|q| q.to_integer())
        .collect();
    let group = if !irreducible {
        None
    } else {
        match (roots.len(), disc_square) {
            (0, false) => Some(GaloisGroup::S4),
            (0, true) => Some(GaloisGroup::A4),
            (1, _) => {
                let (a, b, d) = (f.coeff(3), f.coeff(2), f.coeff(0));
                let r = &roots[0];
                let cyclic = splits_over(&-r, &d, &disc) && splits_over(&a, &(&b - r), &disc);
                Some(if cyclic { GaloisGroup::C4 } else { GaloisGroup::D4 })
            }
            _ => Some(GaloisGroup::V4),
        }
    };
    let modp = primes
        .iter()
        .filter(|&&p| !(&disc % BigInt::from(p)).is_zero())
        .map(|&p| modp_diagnostics(f, p))
        .collect::<Result<Vec<_>>>()?;
    let (disjointness_deduction, justification) = disjointness(group, &disc, k_field);
    Ok(GaloisReport {
        polynomial: f.clone(),
        verdict,
        discriminant: disc,
        discriminant_is_square: disc_square,
        resolvent_irreducible: roots.is_empty(),
        resolvent,
        resolvent_rational_roots: roots,
        splitting_field_degree: group.map(|g| g.order()),
        group,
        modp,
        real_cyclotomic_n: k_field,
        disjointness_deduction,
        justification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn f4_is_s4_and_disjoint() {
        let f4 = p(&[42, 47, -29, -5, 1]);
        let r = quartic_galois(&f4, Some(7), &[2, 3, 5, 7]).unwrap();
        assert_eq!(r.group, Some(GaloisGroup::S4));
        assert!(r.verdict.is_irreducible());
        assert!(!r.discriminant_is_square);
        assert!(r.resolvent_irreducible);
        assert_eq!(r.splitting_field_degree, Some(24));
        assert!(r.disjointness_deduction);
        let m7 = modp_diagnostics(&f4, 7).unwrap();
        assert_eq!(m7.roots, vec![0, 1, 5, 6]);
    }

    #[test]
    fn reference_quartics() {
        let cases = [
            (p(&[1, 0, 0, 0, 1]), GaloisGroup::V4),
            (p(&[-2, 0, 0, 0, 1]), GaloisGroup::D4),
            (p(&[2, 0, 4, 0, 1]), GaloisGroup::C4),
            (p(&[12, 8, 0, 0, 1]), GaloisGroup::A4),
            (p(&[-1, -1, 0, 0, 1]), GaloisGroup::S4),
        ];
        for (f, g) in cases {
            let r = quartic_galois(&f, Some(7), &[]).unwrap();
            assert_eq!(r.group, Some(g), "{f}");
            assert_eq!(r.disjointness_deduction, g == GaloisGroup::S4);
        }
        let r = quartic_galois(&p(&[-2, 0, 0, 0, 1]), None, &[]).unwrap();
        assert_eq!(r.resolvent, p(&[0, 8, 0, 1]));
        assert_eq!(r.discriminant, BigInt::from(-2048));
    }

    #[test]
    fn reducible_quartics_get_no_group() {
        let f = &p(&[1, 0, 1]) * &p(&[2, 0, 1]);
        assert!(!quartic_is_irreducible(&f).unwrap());
        let parts = quartic_factorization(&f).unwrap().unwrap();
        assert_eq!(&parts[0] * &parts[1], f);
        assert_eq!(quartic_galois(&f, None, &[]).unwrap().group, None);
        assert!(!quartic_is_irreducible(&(&p(&[-1, 1]) * &p(&[1, 1, 1, 1]))).unwrap());
        assert!(quartic_galois(&p(&[1, 1, 1]), None, &[]).is_err());
    }

    #[test]
    fn small_reductions() {
        let m = modp_diagnostics(&p(&[-1, 0, 1]), 3).unwrap();
        assert_eq!(m.roots, vec![1, 2]);
        assert!(modp_diagnostics(&p(&[1, 3]), 3).is_err());
        assert!(modp_diagnostics(&p(&[1, 1]), 4).is_err());
    }
}
