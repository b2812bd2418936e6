//! Landau's function, the prime-sum bound, and arithmetic-progression
//! structure of numerical semigroups.

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// All primes up to and including `n`, by plain sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut q = p * p;
        while q <= n {
            composite[q] = true;
            q += p;
        }
    }
    primes
}

/// Landau's function: the maximal lcm of any list of positive integers whose
/// sum is at most `n` (equivalently exactly `n`, since parts of size one pad
/// any shortfall without changing the lcm). Computed as a knapsack over prime
/// powers: an optimal list can always be taken as powers of distinct primes,
/// so each prime contributes at most one power within the budget.
pub fn landau_f(n: u64) -> BigUint {
    let n = n as usize;
    let one = BigUint::from(1u32);
    let mut best = vec![one.clone(); n + 1];
    for p in primes_up_to(n as u64) {
        let p = p as usize;
        for budget in (p..=n).rev() {
            let mut power = p;
            while power <= budget {
                let candidate = &best[budget - power] * BigUint::from(power);
                if candidate > best[budget] {
                    best[budget] = candidate;
                }
                match power.checked_mul(p) {
                    Some(next) => power = next,
                    None => break,
                }
            }
        }
    }
    best.into_iter().max().unwrap_or(one)
}

/// The largest product of consecutive first primes 2 * 3 * 5 * ... whose sum
/// stays within `n`, together with the primes used. Grows at the same rate as
/// [`landau_f`] while keeping the witness structure explicit.
pub fn greedy_g(n: u64) -> Result<(BigUint, Vec<u64>)> {
    if n < 2 {
        return Err(Error::BelowSmallestPrime);
    }
    let mut product = BigUint::from(1u32);
    let mut used = Vec::new();
    let mut sum = 0u64;
    for p in primes_up_to(n) {
        if sum + p > n {
            break;
        }
        sum += p;
        product *= BigUint::from(p);
        used.push(p);
    }
    Ok((product, used))
}

/// The arithmetic progression `{offset + x * period | x >= 0}` of every
/// integer above `bound^2` that the coin set generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArithmeticProgression {
    /// Least multiple of `period` strictly greater than `bound^2`.
    pub offset: u64,
    /// Gcd of the generating coin set.
    pub period: u64,
    /// The bound the coins were drawn from.
    pub bound: u64,
}

impl ArithmeticProgression {
    pub fn contains(&self, z: u64) -> bool {
        z >= self.offset && (z - self.offset).is_multiple_of(self.period)
    }
}

/// For coins `0 < c_1 < c_2 < ... < c_r <= n`, the set of integers `z > n^2`
/// expressible as a non-negative combination of the coins is exactly the
/// progression with period `gcd(c)` and offset the least multiple of the gcd
/// above `n^2`.
pub fn progression(coins: &[u64], n: u64) -> Result<ArithmeticProgression> {
    if coins.is_empty() || coins[0] == 0 || coins.last().copied().unwrap() > n {
        return Err(Error::UnsortedOrOutOfRange);
    }
    if coins.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedOrOutOfRange);
    }
    let d = coins.iter().copied().fold(0, gcd);
    let offset = (n * n / d + 1) * d;
    Ok(ArithmeticProgression {
        offset,
        period: d,
        bound: n,
    })
}

/// Brute-force coin-problem decision: can `z` be written as a non-negative
/// integer combination of the coins? Dynamic programming over `0..=z`.
pub fn representable(coins: &[u64], z: u64) -> bool {
    assert!(!coins.is_empty() && coins.iter().all(|&c| c > 0));
    let z = z as usize;
    let mut reach = vec![false; z + 1];
    reach[0] = true;
    for value in 1..=z {
        reach[value] = coins
            .iter()
            .any(|&c| (c as usize) <= value && reach[value - c as usize]);
    }
    reach[z]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_lcm_product_identity() {
        for a in 1..=60u64 {
            for b in 1..=60u64 {
                assert_eq!(lcm(a, b) * gcd(a, b), a * b);
            }
        }
    }

    #[test]
    fn landau_small_values() {
        let expect: [(u64, u64); 8] = [
            (0, 1),
            (1, 1),
            (2, 2),
            (3, 3),
            (4, 4),
            (5, 6),
            (7, 12),
            (10, 30),
        ];
        for (n, f) in expect {
            assert_eq!(landau_f(n), BigUint::from(f), "F({n})");
        }
    }

    #[test]
    fn greedy_prefix_values() {
        assert_eq!(greedy_g(2).unwrap(), (BigUint::from(2u32), vec![2]));
        assert_eq!(greedy_g(5).unwrap(), (BigUint::from(6u32), vec![2, 3]));
        assert_eq!(
            greedy_g(17).unwrap(),
            (BigUint::from(210u32), vec![2, 3, 5, 7])
        );
        assert_eq!(greedy_g(1), Err(Error::BelowSmallestPrime));
    }

    #[test]
    fn progression_examples() {
        let p = progression(&[2, 3], 3).unwrap();
        assert_eq!((p.offset, p.period), (10, 1));
        let p = progression(&[4, 6], 6).unwrap();
        assert_eq!((p.offset, p.period), (38, 2));
        let p = progression(&[1], 1).unwrap();
        assert_eq!((p.offset, p.period), (2, 1));
    }

    #[test]
    fn progression_rejects_bad_coin_lists() {
        assert_eq!(progression(&[3, 2], 5), Err(Error::UnsortedOrOutOfRange));
        assert_eq!(progression(&[2, 2], 5), Err(Error::UnsortedOrOutOfRange));
        assert_eq!(progression(&[2, 7], 5), Err(Error::UnsortedOrOutOfRange));
        assert_eq!(progression(&[], 5), Err(Error::UnsortedOrOutOfRange));
        assert_eq!(progression(&[0, 2], 5), Err(Error::UnsortedOrOutOfRange));
    }

    #[test]
    fn representable_examples() {
        assert!(representable(&[4, 6], 10));
        assert!(!representable(&[4, 6], 9));
        assert!(representable(&[5], 0));
    }
}
