//! Binomial coefficients and k-subset enumeration.
//!
//! Subsets of `[0, n)` are always handled as strictly increasing slices.
//! The colexicographic rank of `{c_1 < c_2 < ... < c_k}` is
//! `C(c_1, 1) + C(c_2, 2) + ... + C(c_k, k)`, which does not depend on `n`;
//! the subsets of `[0, n)` occupy exactly the ranks `0..C(n, k)`.

/// `C(n, k)`, zero when `k > n`. Panics on `u64` overflow.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Table of `C(m, j)` for `m <= n`, `j <= k`, used by the hot ranking paths.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    k: usize,
    rows: Vec<u64>,
}

impl BinomialTable {
    pub fn new(n: usize, k: usize) -> Self {
        let mut rows = vec![0u64; (n + 1) * (k + 1)];
        for m in 0..=n {
            rows[m * (k + 1)] = 1;
            for j in 1..=k.min(m) {
                let above = rows[(m - 1) * (k + 1) + j - 1];
                let left = if j < m {
                    rows[(m - 1) * (k + 1) + j]
                } else {
                    0
                };
                rows[m * (k + 1) + j] = above + left;
            }
        }
        BinomialTable { k, rows }
    }

    #[inline]
    pub fn get(&self, m: usize, j: usize) -> u64 {
        if j > self.k {
            return binomial(m, j);
        }
        self.rows[m * (self.k + 1) + j]
    }

    /// Colex rank of a strictly increasing subset.
    #[inline]
    pub fn rank(&self, subset: &[usize]) -> usize {
        subset
            .iter()
            .enumerate()
            .map(|(i, &c)| self.get(c, i + 1) as usize)
            .sum()
    }
}

/// Colex rank of the unordered pair `{u, v}`, `u != v`.
#[inline]
pub fn pair_rank(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

/// Colex rank of a strictly increasing subset.
pub fn rank_colex(subset: &[usize]) -> usize {
    debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1) as usize)
        .sum()
}

/// Inverse of [`rank_colex`] for `k`-subsets.
pub fn unrank_colex(mut rank: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank
        let mut c = i - 1;
        while binomial(c + 1, i) as usize <= rank {
            c += 1;
        }
        rank -= binomial(c, i) as usize;
        out[i - 1] = c;
    }
    out
}

/// Colex-order enumeration of the `k`-subsets of `[0, n)`.
///
/// Lending-style: `next` returns a borrow of the internal buffer.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        let mut j = 0;
        loop {
            if j == k {
                self.done = true;
                return None;
            }
            let limit = if j + 1 < k {
                self.current[j + 1]
            } else {
                self.n
            };
            if self.current[j] + 1 < limit {
                self.current[j] += 1;
                for (i, c) in self.current.iter_mut().enumerate().take(j) {
                    *c = i;
                }
                return Some(&self.current);
            }
            j += 1;
        }
    }
}

/// Owned iterator over the `k`-subsets of `[0, n)` in colex (= rank) order.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut inner = Combinations::new(n, k);
    std::iter::from_fn(move || inner.next().map(<[usize]>::to_vec))
}

/// Revolving-door (Gray code) enumeration of `k`-subsets of `[0, n)`:
/// consecutive subsets differ by removing one element and adding another.
///
/// Knuth, TAOCP 7.2.1.3, Algorithm R.
#[derive(Clone, Debug)]
pub struct RevolvingDoor {
    k: usize,
    // c[1..=k] ascending, c[k + 1] = n sentinel; c[0] unused
    c: Vec<usize>,
    started: bool,
    done: bool,
}

impl RevolvingDoor {
    pub fn new(n: usize, k: usize) -> Self {
        let mut c = vec![0; k + 2];
        for (j, slot) in c.iter_mut().enumerate().take(k + 1).skip(1) {
            *slot = j - 1;
        }
        c[k + 1] = n;
        RevolvingDoor {
            k,
            c,
            started: false,
            done: k > n,
        }
    }

    /// Current subset, ascending.
    pub fn current(&self) -> &[usize] {
        &self.c[1..=self.k]
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.step() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }

    fn step(&mut self) -> bool {
        let t = self.k;
        if t == 0 {
            return false;
        }
        let c = &mut self.c;
        let mut j;
        let mut increase;
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return true;
            }
            j = 2;
            increase = false;
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                return true;
            }
            j = 2;
            increase = true;
        }
        loop {
            if j > t {
                return false;
            }
            if !increase {
                // c[j] == c[j-1] + 1 here
                if c[j] >= j {
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return true;
                }
                j += 1;
                increase = true;
            } else {
                // c[j-1] == j - 2 here
                if c[j] + 1 < c[j + 1] {
                    c[j - 1] = c[j];
                    c[j] += 1;
                    return true;
                }
                j += 1;
                increase = false;
            }
        }
    }
}
