use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Below this bound the first thirteen primes form a deterministic
/// Miller-Rabin witness set (Sorenson & Webster, psi_13).
pub const DETERMINISTIC_MR_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

const CACHED_SIEVE_LIMIT: u64 = 1 << 20;

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit <= CACHED_SIEVE_LIMIT {
        let cached = cached_primes();
        let end = cached.partition_point(|&p| p <= limit);
        return cached[..end].to_vec();
    }
    sieve(limit)
}

pub(crate) fn cached_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(CACHED_SIEVE_LIMIT))
}

/// Primes `<= limit` without copying when the cache covers the range.
pub(crate) fn with_primes_up_to<R>(limit: u64, f: impl FnOnce(&[u64]) -> R) -> R {
    if limit <= CACHED_SIEVE_LIMIT {
        let cached = cached_primes();
        let end = cached.partition_point(|&p| p <= limit);
        f(&cached[..end])
    } else {
        f(&sieve(limit))
    }
}

fn sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // 2..=37 is deterministic for all 64-bit inputs
    WITNESSES[..12].iter().all(|&a| strong_probable_prime_u64(n, a))
}

struct StrongTest {
    n: BigUint,
    n_minus_one: BigUint,
    d: BigUint,
    s: u64,
}

impl StrongTest {
    fn new(n: &BigUint) -> Self {
        let n_minus_one = n - 1u32;
        let s = n_minus_one.trailing_zeros().unwrap_or(0);
        let d = &n_minus_one >> s;
        StrongTest { n: n.clone(), n_minus_one, d, s }
    }

    fn passes(&self, a: &BigUint) -> bool {
        let mut x = a.modpow(&self.d, &self.n);
        if x.is_one() || x == self.n_minus_one {
            return true;
        }
        for _ in 1..self.s {
            x = (&x * &x) % &self.n;
            if x == self.n_minus_one {
                return true;
            }
            if x.is_one() {
                return false;
            }
        }
        false
    }
}

/// Deterministic per-input RNG seed, so repeated and parallel runs agree.
pub(crate) fn seed_from(n: &BigUint) -> u64 {
    n.iter_u64_digits().fold(0x9E37_79B9_7F4A_7C15u64, |acc, w| {
        let mut z = acc ^ w.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    })
}

/// Miller-Rabin primality test.
///
/// Deterministic below [`DETERMINISTIC_MR_LIMIT`]. Above it, `rounds` bases are
/// drawn from a generator seeded by `n` itself, giving an error probability of
/// at most `4^-rounds` and identical answers on every run.
pub fn is_probable_prime(n: &BigInt, rounds: u32) -> bool {
    match n.to_biguint() {
        Some(m) => is_probable_prime_biguint(&m, rounds),
        None => false,
    }
}

pub(crate) fn is_probable_prime_biguint(n: &BigUint, rounds: u32) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in &cached_primes()[..200] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let test = StrongTest::new(n);
    let below_limit = n.to_u128().is_some_and(|v| v < DETERMINISTIC_MR_LIMIT);
    if below_limit {
        return WITNESSES.iter().all(|&a| test.passes(&BigUint::from(a)));
    }
    if !test.passes(&BigUint::from(2u32)) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_from(n));
    // bases fit in 64 bits; n exceeds 2^64 here so every base lies in [2, n-2]
    (0..rounds.max(1)).all(|_| {
        let a: u64 = rng.gen_range(2..u64::MAX);
        test.passes(&BigUint::from(a))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn agrees_with_trial_division_to_one_million() {
        let sieve = primes_up_to(1_000_000);
        let mut next = sieve.iter().peekable();
        for n in 0u64..=1_000_000 {
            let is_listed = next.peek() == Some(&&n);
            if is_listed {
                next.next();
            }
            let mr = is_probable_prime(&BigInt::from(n), 1);
            assert_eq!(mr, is_listed, "n = {n}");
        }
        for n in (0u64..=20_000).chain(999_000..=1_000_000) {
            assert_eq!(is_probable_prime(&BigInt::from(n), 1), trial_division_is_prime(n));
        }
    }

    #[test]
    fn examples() {
        assert!(!is_probable_prime(&BigInt::from(1), 40));
        let p47: BigInt = "14476032998358419473538526891666573479317742071".parse().unwrap();
        assert!(is_probable_prime(&p47, 40));
        assert!(is_probable_prime(&BigInt::from(259476976750177u64), 40));
        assert!(!is_probable_prime(&BigInt::from(-7), 40));
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // 3825123056546413051 is a strong pseudoprime to bases 2..=23.
        assert!(!is_probable_prime(&BigInt::from(3825123056546413051u64), 1));
        // psi_12, a strong pseudoprime to all bases up to 37
        let psi12: BigInt = "318665857834031151167461".parse().unwrap();
        assert!(!is_probable_prime(&psi12, 1));
        // Carmichael number above 2^64
        let c: BigInt = "18446744073709551617".parse().unwrap(); // 2^64+1 = 274177 * 67280421310721
        assert!(!is_probable_prime(&c, 5));
        // 2^127 - 1 is prime (above the deterministic limit)
        let m127 = (BigInt::from(1) << 127) - 1;
        assert!(is_probable_prime(&m127, 20));
        assert!(!is_probable_prime(&(&m127 * &m127), 20));
    }
}
