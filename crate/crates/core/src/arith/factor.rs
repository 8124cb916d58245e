use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::float::ln_abs;
use super::powers::max_power;
use super::primes::{is_probable_prime_biguint, seed_from, with_primes_up_to};
use crate::error::{Error, Result};

/// Limits on how hard [`factor`] tries before giving up on a cofactor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorBudget {
    /// Trial division by every prime up to this bound.
    pub trial_bound: u64,
    /// Total Pollard rho iterations shared across all cofactors of one input.
    pub rho_iterations: u64,
    /// Miller-Rabin rounds above the deterministic range.
    pub mr_rounds: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget { trial_bound: 1_000_000, rho_iterations: 10_000_000, mr_rounds: 40 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CofactorStatus {
    /// Fully factored; cofactor is 1.
    Unit,
    /// Cofactor is a probable prime that was not split into `factors`.
    ProbablePrime,
    /// Cofactor is composite and could not be split within budget.
    CompositeUnresolved,
}

/// `|n| = prod(p^e) * cofactor`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
    pub cofactor: BigInt,
    pub cofactor_status: CofactorStatus,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor_status == CofactorStatus::Unit
    }

    /// Product of all prime powers and the cofactor.
    pub fn reconstruct(&self) -> BigInt {
        self.factors
            .iter()
            .fold(self.cofactor.clone(), |acc, (p, e)| acc * p.pow(*e))
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        match self.cofactor_status {
            CofactorStatus::Unit => {}
            CofactorStatus::ProbablePrime => parts.push(format!("{} (probable prime)", self.cofactor)),
            CofactorStatus::CompositeUnresolved => parts.push(format!("[{} composite]", self.cofactor)),
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        f.write_str(&parts.join(" * "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Exact,
    AtLeast,
}

/// Number of distinct prime divisors, exact or as a lower bound when a
/// composite cofactor could not be split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthVerdict {
    pub kind: VerdictKind,
    pub count: u32,
    pub unresolved_cofactor: Option<BigInt>,
}

impl LengthVerdict {
    pub fn exact(count: u32) -> Self {
        LengthVerdict { kind: VerdictKind::Exact, count, unresolved_cofactor: None }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == VerdictKind::Exact
    }

    /// Whether the count is known to be `<= k`; `None` when undecided.
    pub fn at_most(&self, k: u32) -> Option<bool> {
        match self.kind {
            VerdictKind::Exact => Some(self.count <= k),
            VerdictKind::AtLeast if self.count > k => Some(false),
            VerdictKind::AtLeast => None,
        }
    }
}

impl std::fmt::Display for LengthVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            VerdictKind::Exact => write!(f, "{}", self.count),
            VerdictKind::AtLeast => write!(f, ">={}", self.count),
        }
    }
}

/// Product of all primes up to `bound`, cached per bound.
fn primorial(bound: u64) -> Arc<BigUint> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<BigUint>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&bound) {
        return p.clone();
    }
    let product = with_primes_up_to(bound, |primes| {
        let mut layer: Vec<BigUint> = primes.iter().map(|&p| BigUint::from(p)).collect();
        if layer.is_empty() {
            return BigUint::one();
        }
        while layer.len() > 1 {
            layer = layer
                .chunks(2)
                .map(|pair| if pair.len() == 2 { &pair[0] * &pair[1] } else { pair[0].clone() })
                .collect();
        }
        layer.pop().unwrap()
    });
    let product = Arc::new(product);
    cache.lock().unwrap().insert(bound, product.clone());
    product
}

/// Strip every prime `<= bound` from `n`, returning `(prime, exponent)` pairs
/// and the remaining cofactor.
fn trial_divide(n: &BigUint, bound: u64) -> (Vec<(u64, u32)>, BigUint) {
    let mut found = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return (found, rest);
    }
    if let Some(small) = rest.to_u64() {
        let mut m = small;
        with_primes_up_to(bound, |primes| {
            for &p in primes {
                if p * p > m {
                    break;
                }
                if m % p == 0 {
                    let mut e = 0;
                    while m % p == 0 {
                        m /= p;
                        e += 1;
                    }
                    found.push((p, e));
                }
            }
        });
        if m > 1 && m <= bound {
            found.push((m, 1));
            m = 1;
        }
        return (found, BigUint::from(m));
    }
    // gcd with the primorial picks out the squarefree kernel of the small part;
    // reduce first, binary gcd is quadratic in the larger operand
    let g = rest.gcd(&(&*primorial(bound) % &rest));
    if g.is_one() {
        return (found, rest);
    }
    let mut kernel = g;
    with_primes_up_to(bound, |primes| {
        for &p in primes {
            if kernel.is_one() {
                break;
            }
            let divides = match kernel.to_u64() {
                Some(k) => k % p == 0,
                None => (&kernel % p).is_zero(),
            };
            if divides {
                kernel /= p;
                found.push((p, 0));
            }
        }
    });
    for (p, e) in found.iter_mut() {
        let pb = BigUint::from(*p);
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            *e += 1;
        }
    }
    (found, rest)
}

fn rho_u64(n: u64, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<u64> {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    while *budget > 0 {
        let c = rng.gen_range(1..n);
        let mut y = rng.gen_range(0..n);
        let step = |v: u64| ((mul(v, v) as u128 + c as u128) % n as u128) as u64;
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        const BLOCK: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let m = BLOCK.min(r - k);
                for _ in 0..m {
                    y = step(y);
                    q = mul(q, x.abs_diff(y));
                }
                *budget = budget.saturating_sub(m);
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
            if *budget == 0 && g == 1 {
                return None;
            }
        }
        if g == n {
            loop {
                ys = step(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

/// Brent's variant of Pollard rho. Consumes at most `budget` iterations.
fn rho(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed_from(n));
    if let Some(small) = n.to_u64() {
        return rho_u64(small, &mut rng, budget).map(BigUint::from);
    }
    while *budget > 0 {
        let c = BigUint::from(rng.gen_range(1..u64::MAX));
        let mut y = BigUint::from(rng.gen::<u64>()) % n;
        let step = |v: &BigUint| (v * v + &c) % n;
        let mut g = BigUint::one();
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut x = BigUint::zero();
        let mut ys = BigUint::zero();
        const BLOCK: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            *budget = budget.saturating_sub(r);
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = BLOCK.min(r - k);
                for _ in 0..m {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                *budget = budget.saturating_sub(m);
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
            if *budget == 0 && g.is_one() {
                return None;
            }
        }
        if &g == n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

struct Splitter<'a> {
    budget: &'a FactorBudget,
    rho_left: u64,
    primes: BTreeMap<BigUint, u32>,
    unresolved: BigUint,
}

impl Splitter<'_> {
    /// Split `n`, which has no prime factor `<= trial_bound`, appearing `mult` times.
    fn split(&mut self, n: BigUint, mult: u32) {
        if n.is_one() {
            return;
        }
        let bound = self.budget.trial_bound.max(1);
        let below_square = n.to_u128().is_some_and(|v| v <= (bound as u128) * (bound as u128));
        if below_square || is_probable_prime_biguint(&n, self.budget.mr_rounds) {
            *self.primes.entry(n).or_insert(0) += mult;
            return;
        }
        let (root, exp) = max_power(&n, bound.saturating_add(1));
        if exp > 1 {
            self.split(root, mult * exp);
            return;
        }
        match rho(&n, &mut self.rho_left) {
            Some(d) => {
                let other = &n / &d;
                self.split(d, mult);
                self.split(other, mult);
            }
            None => self.unresolved *= n.pow(mult),
        }
    }
}

/// Factor `n` (sign ignored) by trial division, perfect-power extraction and
/// Pollard rho, all within `budget`.
///
/// Probable primes are listed among `factors`; whatever rho cannot split
/// within the iteration cap is left in `cofactor` as `CompositeUnresolved`.
pub fn factor(n: &BigInt, budget: &FactorBudget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput { op: "factor" });
    }
    let (small, rest) = trial_divide(n.magnitude(), budget.trial_bound);
    let mut splitter = Splitter {
        budget,
        rho_left: budget.rho_iterations,
        primes: BTreeMap::new(),
        unresolved: BigUint::one(),
    };
    splitter.split(rest, 1);

    let mut factors: Vec<(BigInt, u32)> = small.into_iter().map(|(p, e)| (BigInt::from(p), e)).collect();
    factors.extend(splitter.primes.into_iter().map(|(p, e)| (BigInt::from(p), e)));
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    let cofactor = BigInt::from(splitter.unresolved);
    let cofactor_status =
        if cofactor.is_one() { CofactorStatus::Unit } else { CofactorStatus::CompositeUnresolved };
    Ok(Factorization { factors, cofactor, cofactor_status })
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: &BigInt, budget: &FactorBudget) -> Result<BigInt> {
    let f = factor(n, budget)?;
    if !f.is_complete() {
        return Err(Error::BudgetExhausted { cofactor: f.cofactor });
    }
    Ok(f.factors.iter().fold(BigInt::one(), |acc, (p, _)| acc * p))
}

/// `log max(|a|, |b|, |c|) / log rad(abc)` for a coprime zero-sum triple.
pub fn abc_quality(a: &BigInt, b: &BigInt, c: &BigInt, budget: &FactorBudget) -> Result<f64> {
    const OP: &str = "abc_quality";
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::ZeroInput { op: OP });
    }
    if !(a + b + c).is_zero() {
        return Err(Error::Domain { op: OP, reason: format!("{a} + {b} + {c} != 0") });
    }
    if !a.gcd(b).is_one() || !b.gcd(c).is_one() || !a.gcd(c).is_one() {
        return Err(Error::Domain { op: OP, reason: format!("({a}, {b}, {c}) is not pairwise coprime") });
    }
    // pairwise coprime, so rad(abc) = rad(a) rad(b) rad(c)
    let rad = radical(a, budget)? * radical(b, budget)? * radical(c, budget)?;
    let largest = a.abs().max(b.abs()).max(c.abs());
    Ok(ln_abs(&largest) / ln_abs(&rad))
}

/// True iff no prime `p` has `p^6 | d`.
///
/// Errors with `BudgetExhausted` only when an unsplit cofactor is large enough
/// to hide a sixth power.
pub fn sixth_power_free(d: &BigInt, budget: &FactorBudget) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroInput { op: "sixth_power_free" });
    }
    let f = factor(d, budget)?;
    if f.factors.iter().any(|(_, e)| *e >= 6) {
        return Ok(false);
    }
    if f.is_complete() {
        return Ok(true);
    }
    // An unresolved cofactor is composite, not a perfect power, and free of
    // primes <= trial_bound, so a sixth power inside it needs a second prime too.
    let t = BigInt::from(budget.trial_bound.max(1));
    if f.cofactor < t.pow(7) {
        return Ok(true);
    }
    Err(Error::BudgetExhausted { cofactor: f.cofactor })
}

/// Number of distinct primes dividing `n >= 1`.
pub fn distinct_prime_count(n: &BigInt, budget: &FactorBudget) -> Result<LengthVerdict> {
    distinct_prime_count_bounded(n, budget, None)
}

/// Like [`distinct_prime_count`], but once the count is certainly above
/// `stop_above` no further splitting is attempted.
///
/// A cofactor free of primes `<= trial_bound` that fails Miller-Rabin and is
/// not a perfect power has at least two distinct prime factors, which is what
/// lets a search decide `length <= 1` without running rho at all.
pub fn distinct_prime_count_bounded(
    n: &BigInt,
    budget: &FactorBudget,
    stop_above: Option<u32>,
) -> Result<LengthVerdict> {
    if n.is_zero() {
        return Err(Error::ZeroInput { op: "distinct_prime_count" });
    }
    let (small, rest) = trial_divide(n.magnitude(), budget.trial_bound);
    let count = small.len() as u32;
    if rest.is_one() {
        return Ok(LengthVerdict::exact(count));
    }
    let bound = budget.trial_bound.max(1);
    let below_square = rest.to_u128().is_some_and(|v| v <= (bound as u128) * (bound as u128));
    if below_square || is_probable_prime_biguint(&rest, budget.mr_rounds) {
        return Ok(LengthVerdict::exact(count + 1));
    }
    let (root, exp) = max_power(&rest, bound.saturating_add(1));
    if exp > 1 && is_probable_prime_biguint(&root, budget.mr_rounds) {
        return Ok(LengthVerdict::exact(count + 1));
    }
    let lower = count + 2;
    if stop_above.is_some_and(|k| lower > k) {
        return Ok(LengthVerdict {
            kind: VerdictKind::AtLeast,
            count: lower,
            unresolved_cofactor: Some(rest.into()),
        });
    }
    let mut splitter = Splitter {
        budget,
        rho_left: budget.rho_iterations,
        primes: BTreeMap::new(),
        unresolved: BigUint::one(),
    };
    splitter.split(root, 1);
    let resolved = count + splitter.primes.len() as u32;
    if splitter.unresolved.is_one() {
        return Ok(LengthVerdict::exact(resolved));
    }
    Ok(LengthVerdict {
        kind: VerdictKind::AtLeast,
        count: resolved + 2,
        unresolved_cofactor: Some(splitter.unresolved.into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_probable_prime;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn next_prime(mut n: BigInt) -> BigInt {
        while !is_probable_prime(&n, 40) {
            n += 1;
        }
        n
    }

    fn check_invariants(n: &BigInt, f: &Factorization, budget: &FactorBudget) {
        assert_eq!(f.reconstruct(), n.abs(), "reconstruction of {n}");
        for w in f.factors.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
        for (p, e) in &f.factors {
            assert!(*e >= 1);
            assert!(is_probable_prime(p, budget.mr_rounds), "{p} listed as prime");
        }
        assert_eq!(f.cofactor.is_one(), f.cofactor_status == CofactorStatus::Unit);
    }

    #[test]
    fn factor_examples() {
        let budget = FactorBudget::default();
        let f = factor(&b(720), &budget).unwrap();
        assert_eq!(f.factors, vec![(b(2), 4), (b(3), 2), (b(5), 1)]);
        assert_eq!(f.cofactor_status, CofactorStatus::Unit);
        let f = factor(&b(3275), &budget).unwrap();
        assert_eq!(f.factors, vec![(b(5), 2), (b(131), 1)]);
        assert_eq!(f.to_string(), "5^2 * 131");
        assert!(matches!(factor(&b(0), &budget), Err(Error::ZeroInput { .. })));
        let f = factor(&b(-1), &budget).unwrap();
        assert!(f.factors.is_empty() && f.is_complete());
    }

    #[test]
    fn tiny_budget_leaves_semiprime_unresolved() {
        let p = next_prime(b(10).pow(29) + 7);
        let q = next_prime(b(10).pow(29) * 3 + 1);
        let n = &p * &q;
        let budget = FactorBudget { trial_bound: 1000, rho_iterations: 100, mr_rounds: 20 };
        let f = factor(&n, &budget).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.cofactor, n);
        assert_eq!(f.cofactor_status, CofactorStatus::CompositeUnresolved);
        assert!(matches!(radical(&n, &budget), Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn rho_splits_medium_semiprimes() {
        let p = next_prime(b(10).pow(9) + 1);
        let q = next_prime(b(10).pow(15) + 1);
        let n = &p * &q * &p;
        let f = factor(&n, &FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(p, 2), (q, 1)]);
        assert!(f.is_complete());
    }

    #[test]
    fn large_prime_powers_extracted() {
        let p = next_prime(b(10).pow(20));
        let n = p.pow(5) * b(12);
        let f = factor(&n, &FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(b(2), 2), (b(3), 1), (p, 5)]);
    }

    #[test]
    fn radical_examples() {
        let budget = FactorBudget::default();
        assert_eq!(radical(&b(720), &budget).unwrap(), b(30));
        assert_eq!(radical(&b(131), &budget).unwrap(), b(131));
        assert_eq!(radical(&b(97200), &budget).unwrap(), b(30));
        assert_eq!(radical(&b(1), &budget).unwrap(), b(1));
    }

    #[test]
    fn abc_quality_examples() {
        let budget = FactorBudget::default();
        let q = abc_quality(&b(1), &b(8), &b(-9), &budget).unwrap();
        assert!((q - 9f64.ln() / 6f64.ln()).abs() < 1e-12);
        assert!((q - 1.226).abs() < 1e-3);
        let q = abc_quality(&b(1), &b(2), &b(-3), &budget).unwrap();
        assert!((q - 3f64.ln() / 6f64.ln()).abs() < 1e-12);
        let q = abc_quality(&b(2), &b(3), &b(-5), &budget).unwrap();
        assert!((q - 5f64.ln() / 30f64.ln()).abs() < 1e-12);
        assert!(abc_quality(&b(1), &b(2), &b(3), &budget).is_err());
        assert!(abc_quality(&b(2), &b(4), &b(-6), &budget).is_err());
        assert!(abc_quality(&b(0), &b(1), &b(-1), &budget).is_err());
    }

    #[test]
    fn sixth_powers() {
        let budget = FactorBudget::default();
        assert!(sixth_power_free(&b(15), &budget).unwrap());
        assert!(!sixth_power_free(&b(64), &budget).unwrap());
        assert!(sixth_power_free(&b(1090), &budget).unwrap());
        assert!(!sixth_power_free(&b(-3 * 729), &budget).unwrap());
        assert!(sixth_power_free(&b(-2), &budget).unwrap());
        assert!(sixth_power_free(&b(0), &budget).is_err());
    }

    #[test]
    fn distinct_prime_counts() {
        let budget = FactorBudget::default();
        assert_eq!(distinct_prime_count(&b(1), &budget).unwrap(), LengthVerdict::exact(0));
        assert_eq!(distinct_prime_count(&b(9), &budget).unwrap(), LengthVerdict::exact(1));
        assert_eq!(distinct_prime_count(&b(53 * 53 * 367), &budget).unwrap(), LengthVerdict::exact(2));
        assert!(distinct_prime_count(&b(0), &budget).is_err());
    }

    #[test]
    fn bounded_count_decides_without_rho() {
        let p = next_prime(b(10).pow(29) + 7);
        let q = next_prime(b(10).pow(29) * 3 + 1);
        let n = &p * &q;
        let budget = FactorBudget { trial_bound: 1000, rho_iterations: 100, mr_rounds: 20 };
        let v = distinct_prime_count_bounded(&n, &budget, Some(1)).unwrap();
        assert_eq!(v.kind, VerdictKind::AtLeast);
        assert_eq!(v.count, 2);
        assert_eq!(v.at_most(1), Some(false));
        assert_eq!(v.at_most(2), None);
        assert_eq!(v.unresolved_cofactor, Some(n.clone()));

        let v = distinct_prime_count_bounded(&p.pow(3), &budget, Some(1)).unwrap();
        assert_eq!(v, LengthVerdict::exact(1));
        let v = distinct_prime_count(&(&n * b(6)), &budget).unwrap();
        assert_eq!((v.kind, v.count), (VerdictKind::AtLeast, 4));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reconstruction_for_sixty_digit_inputs(digits in "[1-9][0-9]{59}") {
            let n: BigInt = digits.parse().unwrap();
            let budget = FactorBudget { trial_bound: 100_000, rho_iterations: 20_000, mr_rounds: 20 };
            let f = factor(&n, &budget).unwrap();
            check_invariants(&n, &f, &budget);
        }

        #[test]
        fn radical_properties(n in 1u64..5_000_000) {
            let budget = FactorBudget::default();
            let n = BigInt::from(n);
            let r = radical(&n, &budget).unwrap();
            prop_assert!((&n % &r).is_zero());
            prop_assert_eq!(radical(&r, &budget).unwrap(), r.clone());
            let f = factor(&r, &budget).unwrap();
            prop_assert!(f.factors.iter().all(|(_, e)| *e == 1));
        }

        #[test]
        fn abc_quality_symmetric(a in 1i64..10_000, b in 1i64..10_000) {
            let budget = FactorBudget::default();
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            prop_assume!(a.gcd(&b).is_one());
            let c = -(&a + &b);
            let q = abc_quality(&a, &b, &c, &budget).unwrap();
            for (x, y, z) in [(&b, &c, &a), (&c, &a, &b), (&b, &a, &c)] {
                prop_assert!((abc_quality(x, y, z, &budget).unwrap() - q).abs() < 1e-12);
            }
            prop_assert!((abc_quality(&-&a, &-&b, &-&c, &budget).unwrap() - q).abs() < 1e-12);
        }
    }
}
