/// A permutation of `{1..n}` stored as its images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = images.clone();
        seen.sort_unstable();
        assert!(seen.iter().copied().eq(1..=images.len()), "not a permutation");
        Permutation(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// σ(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn sign(&self) -> i64 {
        let mut inv = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            out[s - 1] = i + 1;
        }
        Permutation(out)
    }

    /// ρ_j = (j, j+1).
    pub fn rho(n: usize, j: usize) -> Permutation {
        let mut p = Self::identity(n);
        p.0.swap(j - 1, j);
        p
    }

    /// κ_j = (j, j+1, …, n); κ_n = id.
    pub fn kappa(n: usize, j: usize) -> Permutation {
        Permutation(
            (1..=n)
                .map(|i| match i {
                    i if i < j => i,
                    i if i < n => i + 1,
                    _ => j,
                })
                .collect(),
        )
    }

    /// Σ_n in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}
