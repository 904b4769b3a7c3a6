//! Prime sieve.

/// The first `t` primes, by Eratosthenes with the standard upper bound
/// `p_t <= t (ln t + ln ln t)` for `t >= 6`.
pub fn first_primes(t: usize) -> Vec<u64> {
    if t == 0 {
        return vec![];
    }
    let mut limit = if t < 6 {
        13
    } else {
        let tf = t as f64;
        (tf * (tf.ln() + tf.ln().ln())).ceil() as usize + 1
    };
    loop {
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        if limit >= 1 {
            sieve[1] = false;
        }
        let mut i = 2;
        while i * i <= limit {
            if sieve[i] {
                let mut j = i * i;
                while j <= limit {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        let primes: Vec<u64> = (2..=limit).filter(|i| sieve[*i]).map(|i| i as u64).collect();
        if primes.len() >= t {
            return primes[..t].to_vec();
        }
        limit *= 2; // bound estimate was too tight; retry
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::is_prime;

    #[test]
    fn first_few() {
        assert_eq!(first_primes(0), Vec::<u64>::new());
        assert_eq!(first_primes(1), vec![2]);
        assert_eq!(first_primes(6), vec![2, 3, 5, 7, 11, 13]);
    }

    #[test]
    fn count_and_primality() {
        let ps = first_primes(200);
        assert_eq!(ps.len(), 200);
        assert!(ps.iter().all(|p| is_prime(*p)));
        assert_eq!(ps[199], 1223);
    }
}
