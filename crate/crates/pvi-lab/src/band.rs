//! Banded complex linear solver.
//!
//! The per-mode implicit step couples each slab node to its neighbours plus
//! the front amplitude, giving a narrow-banded complex system that is
//! factorized once per mode (the coefficients are frozen) and reused for
//! every time step. Storage and pivoting follow the usual LAPACK band
//! layout: `kl` subdiagonals, `ku` superdiagonals, and `kl` extra rows of
//! fill-in for partial pivoting.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BandError {
    #[error("singular band matrix: zero pivot at column {col}")]
    Singular { col: usize },
}

#[derive(Debug, Clone)]
pub struct BandMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    ldab: usize,
    /// Column-major band storage, `ldab` rows by `n` columns.
    data: Vec<Complex64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        let ldab = 2 * kl + ku + 1;
        Self {
            n,
            kl,
            ku,
            ldab,
            data: vec![Complex64::new(0.0, 0.0); ldab * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.n);
        debug_assert!(i + self.ku >= j && j + self.kl >= i, "(i,j)=({i},{j}) outside band");
        j * self.ldab + (self.kl + self.ku + i - j)
    }

    /// Entry within the working band (includes pivoting fill-in range).
    #[inline]
    fn widx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i + self.kl + self.ku >= j && j + self.kl >= i);
        j * self.ldab + (self.kl + self.ku + i - j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let k = self.idx(i, j);
        self.data[k] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: Complex64) {
        let k = self.idx(i, j);
        self.data[k] += v;
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        if i + self.ku >= j && j + self.kl >= i {
            self.data[j * self.ldab + (self.kl + self.ku + i - j)]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    /// LU factorization with partial pivoting, in place.
    pub fn factorize(mut self) -> Result<BandLu, BandError> {
        let n = self.n;
        let kl = self.kl;
        let kuw = self.kl + self.ku; // upper bandwidth after fill-in
        let mut piv = vec![0usize; n];
        for j in 0..n {
            let pend = (j + kl).min(n - 1);
            let mut ip = j;
            let mut best = self.data[self.widx(j, j)].norm_sqr();
            for i in j + 1..=pend {
                let m = self.data[self.widx(i, j)].norm_sqr();
                if m > best {
                    best = m;
                    ip = i;
                }
            }
            if best == 0.0 {
                return Err(BandError::Singular { col: j });
            }
            piv[j] = ip;
            let cend = (j + kuw).min(n - 1);
            if ip != j {
                for c in j..=cend {
                    let a = self.widx(j, c);
                    let b = self.widx(ip, c);
                    self.data.swap(a, b);
                }
            }
            let pivot = self.data[self.widx(j, j)];
            for i in j + 1..=pend {
                let m = self.data[self.widx(i, j)] / pivot;
                self.data[self.widx(i, j)] = m;
                if m.norm_sqr() != 0.0 {
                    for c in j + 1..=cend {
                        let up = self.data[self.widx(j, c)];
                        let k = self.widx(i, c);
                        self.data[k] -= m * up;
                    }
                }
            }
        }
        Ok(BandLu { mat: self, piv })
    }
}

#[derive(Debug, Clone)]
pub struct BandLu {
    mat: BandMatrix,
    piv: Vec<usize>,
}

impl BandLu {
    /// Solve `A x = b` in place.
    pub fn solve(&self, b: &mut [Complex64]) {
        let n = self.mat.n;
        let kl = self.mat.kl;
        let kuw = self.mat.kl + self.mat.ku;
        assert_eq!(b.len(), n);
        for j in 0..n {
            let ip = self.piv[j];
            if ip != j {
                b.swap(j, ip);
            }
            let bj = b[j];
            let iend = (j + kl).min(n - 1);
            for i in j + 1..=iend {
                b[i] -= self.mat.data[self.mat.widx(i, j)] * bj;
            }
        }
        for j in (0..n).rev() {
            b[j] /= self.mat.data[self.mat.widx(j, j)];
            let bj = b[j];
            let istart = j.saturating_sub(kuw);
            for i in istart..j {
                b[i] -= self.mat.data[self.mat.widx(i, j)] * bj;
            }
        }
    }
}
