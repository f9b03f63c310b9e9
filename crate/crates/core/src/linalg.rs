//! Exact matrix rank over ℚ (fraction-free elimination) and over prime fields.

use num_bigint::BigInt;
use num_traits::Zero;

/// Ground field characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
pub enum Characteristic {
    #[default]
    Zero,
    Prime(u32),
}

impl Characteristic {
    /// Parses `0` or a prime.
    pub fn from_u32(p: u32) -> Option<Self> {
        match p {
            0 => Some(Characteristic::Zero),
            p if is_prime(p) => Some(Characteristic::Prime(p)),
            _ => None,
        }
    }

    pub fn value(self) -> u32 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => p,
        }
    }
}

impl std::fmt::Display for Characteristic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(&self, characteristic: Characteristic) -> usize {
        match characteristic {
            Characteristic::Zero => rank_rational(self),
            Characteristic::Prime(p) => rank_mod_p(self, p),
        }
    }
}

/// Rank over ℚ by Bareiss elimination. Runs in `i128` and redoes the
/// elimination with big integers if an intermediate minor overflows.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let small: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c) as i128).collect())
        .collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => bareiss_big(m),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c];
        for r in rank + 1..rows {
            let f = a[r][c];
            for j in c + 1..cols {
                let v = pivot
                    .checked_mul(a[r][j])?
                    .checked_sub(f.checked_mul(a[rank][j])?)?;
                // exact by Sylvester's identity
                a[r][j] = v / prev;
            }
            a[r][c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(m: &IntMatrix) -> usize {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| (0..cols).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in rank + 1..rows {
            let f = a[r][c].clone();
            for j in c + 1..cols {
                let v = &pivot * &a[r][j] - &f * &a[rank][j];
                a[r][j] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over the prime field `GF(p)`.
pub fn rank_mod_p(m: &IntMatrix, p: u32) -> usize {
    let p = p as u64;
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| m.get(r, c).rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for j in c..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for r in rank + 1..rows {
            let f = a[r][c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                a[r][j] = (a[r][j] + p * p - f * a[rank][j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}
