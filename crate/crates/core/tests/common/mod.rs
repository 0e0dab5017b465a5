//! Checks shared by the integration tests and the acceptance run. Each
//! returns `Err` with a description of the first mismatch.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use scb_core::arith::{parse_rational, rat, ComplexBox, Interval, Precision, Rational};
use scb_core::methods::{catalog, catalog::NAMES};
use scb_core::poly::{enclose_all_roots, isolate_real_roots, IntegerPoly, RationalPoly};
use scb_core::recursion::{eval_mu_interval, mu_prefix};

pub type Check = Result<(), String>;

fn pow(q: &Rational, n: usize) -> Rational {
    num_traits::pow(q.clone(), n)
}

/// `mu_n(0) = tau_n` for every catalog method and `n <= n_max`.
pub fn mu_at_zero_is_tau(n_max: usize) -> Check {
    for name in NAMES {
        let m = catalog(name).unwrap();
        let mu = mu_prefix(&m, &Rational::zero(), n_max).map_err(|e| e.to_string())?;
        let tau = m.tau_prefix(n_max);
        if let Some(n) = (0..=n_max).find(|&n| mu[n] != tau[n]) {
            return Err(format!("{name}: mu_{n}(0) = {} but tau_{n} = {}", mu[n], tau[n]));
        }
    }
    Ok(())
}

/// BDF1: `mu_n(g) = 1 / (g + 1)^(n+1)`.
pub fn bdf1_identity(n_max: usize) -> Check {
    let m = catalog("bdf1").unwrap();
    for g in [rat(1, 3), rat(1, 1), rat(7, 2), rat(1000, 1)] {
        let mu = mu_prefix(&m, &g, n_max).unwrap();
        let base = Rational::one() / (&g + Rational::one());
        for (n, v) in mu.iter().enumerate() {
            if *v != pow(&base, n + 1) {
                return Err(format!("bdf1 mu_{n}({g}) = {v}"));
            }
        }
    }
    Ok(())
}

/// BDF2 at `g = 1/2`: `mu_n = (n + 1) / 2^(n+1)`.
pub fn bdf2_identity(n_max: usize) -> Check {
    let m = catalog("bdf2").unwrap();
    let mu = mu_prefix(&m, &rat(1, 2), n_max).unwrap();
    for (n, v) in mu.iter().enumerate() {
        let want = Rational::from_integer(BigInt::from(n + 1)) * pow(&rat(1, 2), n + 1);
        if *v != want {
            return Err(format!("bdf2 mu_{n}(1/2) = {v}, want {want}"));
        }
    }
    Ok(())
}

/// AB2 at `g = 4/9`: `mu_n = 3^(1-n) (2^n - 4 (-1)^n) / 4` for `n >= 1`.
pub fn ab2_identity(n_max: usize) -> Check {
    let m = catalog("ab2").unwrap();
    let mu = mu_prefix(&m, &rat(4, 9), n_max).unwrap();
    for n in 1..=n_max {
        let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        let two_n = Rational::from_integer(BigInt::one() << n);
        let want = pow(&rat(1, 3), n - 1) * (two_n - rat(4, 1) * sign) * rat(1, 4);
        if mu[n] != want {
            return Err(format!("ab2 mu_{n}(4/9) = {}, want {want}", mu[n]));
        }
    }
    Ok(())
}

/// Interval evaluation contains the exact value over `terms` terms.
pub fn interval_contains_exact(terms: usize) -> Check {
    let cases = [("bdf3", rat(1, 2)), ("bdf6", rat(1, 10)), ("ab3", rat(1, 7)), ("ebdf4", rat(3, 10)), ("bdf4", rat(48625, 100000))];
    for (name, g) in cases {
        let m = catalog(name).unwrap();
        let exact = mu_prefix(&m, &g, terms).unwrap();
        let iv = eval_mu_interval(&m, &g, terms, Precision::digits(60).unwrap()).unwrap();
        if let Some(n) = (0..=terms).find(|&n| !iv[n].contains_rational(&exact[n])) {
            return Err(format!("{name} at {g}: interval for mu_{n} misses the exact value"));
        }
    }
    Ok(())
}

fn random_poly(rng: &mut StdRng) -> IntegerPoly {
    let deg = rng.gen_range(1..=8);
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..=20)).collect();
    if c[0] == 0 {
        c[0] = 1;
    }
    // occasionally force a repeated factor
    let p = IntegerPoly::from_i64_desc(&c);
    if rng.gen_bool(0.2) {
        let r = rng.gen_range(-3..=3);
        let f = IntegerPoly::from_i64_desc(&[1, -r]);
        return p.mul(&f).mul(&f);
    }
    p
}

/// On `count` random integer polynomials: Sturm counts over the line and on
/// random intervals agree with real root isolation, and the complex root
/// enclosures account for every root with multiplicity.
pub fn random_poly_suite(count: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..count {
        let p = random_poly(&mut rng);
        let q = p.to_rational();
        let iso = isolate_real_roots(&p);
        let total = q.sturm_count(None, None);
        if total != iso.len() {
            return Err(format!("#{i} {p}: sturm {total}, isolated {}", iso.len()));
        }
        let a = rat(rng.gen_range(-40..=40), rng.gen_range(1..=7));
        let b = &a + rat(rng.gen_range(1..=60), rng.gen_range(1..=5));
        let inside = iso.iter().filter(|r| r.cmp_rational(&a).is_gt() && r.cmp_rational(&b).is_le()).count();
        let sc = q.sturm_count(Some(&a), Some(&b));
        if sc != inside {
            return Err(format!("#{i} {p} on ({a}, {b}]: sturm {sc}, isolated {inside}"));
        }
        let roots = enclose_all_roots(&q, &rat(1, 1_000_000)).map_err(|e| format!("#{i} {p}: {e}"))?;
        let mult: usize = roots.iter().map(|r| r.multiplicity).sum();
        if mult != p.deg() {
            return Err(format!("#{i} {p}: multiplicities sum to {mult}, degree {}", p.deg()));
        }
        let real = roots.iter().filter(|r| r.real).count();
        if real != iso.len() {
            return Err(format!("#{i} {p}: {real} certified real enclosures, {} isolated", iso.len()));
        }
        for r in &roots {
            let v = q.eval_box(&r.enclosure);
            if !v.contains_zero() {
                return Err(format!("#{i} {p}: enclosure {:?} excludes a root", r.approx()));
            }
        }
    }
    Ok(())
}

/// Roots chosen first, then multiplied out: isolation finds each of them.
pub fn constructed_roots(count: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..count {
        let k = rng.gen_range(1..=6);
        let mut roots: Vec<Rational> = (0..k).map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=9))).collect();
        let mut p = RationalPoly::one();
        for r in &roots {
            p = p.mul(&RationalPoly::from_ascending(vec![-r.clone(), Rational::one()]));
        }
        roots.sort();
        roots.dedup();
        let iso = isolate_real_roots(&p.to_integer_primitive());
        if iso.len() != roots.len() {
            return Err(format!("#{i}: {} roots isolated, {} distinct", iso.len(), roots.len()));
        }
        for (e, r) in iso.iter().zip(&roots) {
            if !e.contains(r) && !e.is_root_of(&RationalPoly::from_ascending(vec![-r.clone(), Rational::one()])) {
                return Err(format!("#{i}: enclosure [{}, {}] misses {r}", e.lo, e.hi));
            }
        }
    }
    Ok(())
}

/// One unit in the last place of a printed decimal.
pub fn last_place(s: &str) -> Rational {
    let places = s.trim_start_matches('-').split_once('.').map(|(_, f)| f.len()).unwrap_or(0);
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), places))
}

fn near(iv: &Interval, printed: &str) -> bool {
    let p = parse_rational(printed).unwrap();
    let tol = last_place(printed);
    let lo = iv.lo().to_rational() - &tol;
    let hi = iv.hi().to_rational() + &tol;
    lo <= p && p <= hi
}

/// The box, widened by one unit in the last printed place, contains the
/// printed value.
pub fn box_matches(b: &ComplexBox, re: &str, im: &str) -> bool {
    near(&b.re, re) && near(&b.im, im)
}
