use std::time::Instant;

use super::report::VerificationReport;

/// Partial sums of binomial coefficients, `b(n, k) = sum_{j <= k} C(n, j)`,
/// and their symmetrised re-indexing `a(n, k)` for `0 <= k <= 2n-4`.
#[derive(Clone, Debug)]
pub struct BernoulliTriangle {
    b: Vec<Vec<u128>>,
}

impl BernoulliTriangle {
    /// Rows `0..=max_n`, computed from binomial coefficients (not from the recursion).
    pub fn new(max_n: usize) -> Self {
        assert!(max_n < 120, "row sums must fit in u128");
        let mut binom = vec![1u128];
        let mut b = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            if n > 0 {
                let mut next = vec![1u128; n + 1];
                for k in 1..n {
                    next[k] = binom[k - 1] + binom[k];
                }
                binom = next;
            }
            let row = binom
                .iter()
                .scan(0u128, |acc, c| {
                    *acc += c;
                    Some(*acc)
                })
                .collect();
            b.push(row);
        }
        BernoulliTriangle { b }
    }

    pub fn max_n(&self) -> usize {
        self.b.len() - 1
    }

    pub fn b(&self, n: usize, k: usize) -> u128 {
        self.b[n][k]
    }

    pub fn a(&self, n: usize, k: usize) -> u128 {
        assert!(n >= 2 && k <= 2 * n - 4);
        if k <= n - 2 {
            self.b(n - 1, k)
        } else {
            self.b(n - 1, 2 * n - 4 - k)
        }
    }

    pub fn a_row(&self, n: usize) -> Vec<u128> {
        (0..=2 * n - 4).map(|k| self.a(n, k)).collect()
    }

    /// `b(n,k) = b(n-1,k-1) + b(n-1,k)` for `0 < k < n`.
    pub fn recursion_holds(&self, n: usize) -> bool {
        (1..n).all(|k| self.b(n, k) == self.b(n - 1, k - 1) + self.b(n - 1, k))
    }

    /// Symmetric, strictly increasing up to the middle, ends equal to 1,
    /// middle term `2^(n-1) - 1`.
    pub fn row_shape_holds(&self, n: usize) -> bool {
        let row = self.a_row(n);
        let mid = n - 2;
        row.iter().eq(row.iter().rev())
            && row[..=mid].windows(2).all(|w| w[0] < w[1])
            && row[0] == 1
            && row[mid] == (1u128 << (n - 1)) - 1
    }
}

/// Row n of the symmetrised triangle.
pub fn bernoulli_row(n: usize) -> Vec<u128> {
    BernoulliTriangle::new(n).a_row(n)
}

fn target(n: usize) -> u128 {
    1 + (n as u128 - 2) * (1u128 << (n - 1))
}

/// Row sum of the symmetrised triangle against `1 + (n-2) 2^(n-1)`.
pub fn row_sum_check(n: usize) -> VerificationReport {
    let start = Instant::now();
    let sum: u128 = bernoulli_row(n).iter().sum();
    let report = if sum == target(n) {
        VerificationReport::pass("row_sum", n, Some(sum.to_string()))
    } else {
        VerificationReport::fail("row_sum", n, format!("row sums to {sum}, expected {}", target(n)))
    };
    report.timed(start)
}

/// `sum_{j=0}^{n-2} (2j+1) C(n-1, n-2-j) = 1 + (n-2) 2^(n-1)`.
pub fn identity_check(n: usize) -> VerificationReport {
    let start = Instant::now();
    let t = BernoulliTriangle::new(n);
    let binom = |m: usize, k: usize| if k == 0 { t.b(m, 0) } else { t.b(m, k) - t.b(m, k - 1) };
    let lhs: u128 = (0..=n - 2).map(|j| (2 * j as u128 + 1) * binom(n - 1, n - 2 - j)).sum();
    let report = if lhs == target(n) {
        VerificationReport::pass("identity", n, Some(lhs.to_string()))
    } else {
        VerificationReport::fail("identity", n, format!("left side {lhs}, expected {}", target(n)))
    };
    report.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        assert_eq!(bernoulli_row(2), vec![1]);
        assert_eq!(bernoulli_row(4), vec![1, 4, 7, 4, 1]);
        assert_eq!(bernoulli_row(6), vec![1, 6, 16, 26, 31, 26, 16, 6, 1]);
        assert_eq!(bernoulli_row(5)[3], 15);
        let t = BernoulliTriangle::new(12);
        assert_eq!(t.b(5, 5), 32);
        for n in 2..=12 {
            assert!(t.recursion_holds(n));
            assert!(t.row_shape_holds(n));
            assert!(row_sum_check(n).is_pass());
            assert!(identity_check(n).is_pass());
        }
        assert_eq!(row_sum_check(6).witness.as_deref(), Some("129"));
    }
}
