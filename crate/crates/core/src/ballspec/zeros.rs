//! Positive zeros of J_p for the orders a given dimension needs, with an
//! on-disk cache.
//!
//! Zeros are located by a sign-change sweep with step π/2 (consecutive zeros
//! of J_p are separated by more than π for p > ½, so no bracket can hold two)
//! and polished by bisection-safeguarded Newton steps using J and J'.
//!
//! Cache file format: a header line `heatspec-zeros v1 m=<m> xmax=<x>`
//! followed by one record per zero, `p k zero`, with the zero printed to 17
//! significant digits (lossless f64 round-trip). The cache directory comes
//! from `HEATSPEC_CACHE_DIR` (default `./cache`).

use super::bessel::bessel_j_prime;
use crate::BallError;
use std::io::{BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};

/// Sorted zero lists per order, for all integer orders p_min(m) … as long as
/// zeros ≤ x_max exist.
#[derive(Clone, Debug)]
pub struct ZeroTable {
    pub m: i64,
    pub x_max: f64,
    /// orders[i] holds the zeros of J_{p_min + i} in (0, x_max].
    orders: Vec<Vec<f64>>,
    p_min: u32,
}

/// First tangential order for dimension m: p = n + m/2 − 1 at n = 0.
pub fn min_order(m: i64) -> u32 {
    (m / 2 - 1) as u32
}

fn newton_polish(p: f64, mut lo: f64, mut hi: f64) -> Result<f64, BallError> {
    let (flo, _) = bessel_j_prime(p, lo)?;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..80 {
        let (fx, dfx) = bessel_j_prime(p, x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx > 0.0) == (flo > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        let step = fx / dfx;
        let mut next = x - step;
        if !(lo < next && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-16 * x {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

/// All zeros of J_p in (0, x_max], each bracketed by a sign change of the
/// sweep and polished to full double precision.
pub fn bessel_zeros(p: f64, x_max: f64) -> Result<Vec<f64>, BallError> {
    if !(1.0..=super::bessel::NU_MAX).contains(&p) {
        return Err(BallError::BesselRange { nu: p, x: 0.0 });
    }
    let mut zeros = Vec::new();
    if x_max <= p {
        // J_p has no zeros at or below its order
        return Ok(zeros);
    }
    let step = std::f64::consts::FRAC_PI_2;
    // J_p > 0 on (0, j_{p,1}), and j_{p,1} > p
    let mut x_prev = p.max(1e-3);
    let (mut f_prev, _) = bessel_j_prime(p, x_prev)?;
    while x_prev < x_max {
        let x_next = (x_prev + step).min(x_max + 1e-12);
        let (f_next, _) = bessel_j_prime(p, x_next)?;
        if f_prev == 0.0 {
            // the sweep landed exactly on a zero at x_prev (astronomically
            // rare; the polish below handles the generic case)
            zeros.push(x_prev);
        } else if f_next == 0.0 {
            zeros.push(x_next);
        } else if (f_prev > 0.0) != (f_next > 0.0) {
            let z = newton_polish(p, x_prev, x_next)?;
            if z <= x_max {
                zeros.push(z);
            }
        }
        x_prev = x_next;
        f_prev = f_next;
        if x_prev >= x_max {
            break;
        }
    }
    zeros.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    Ok(zeros)
}

impl ZeroTable {
    /// Generate the table for dimension m up to x_max.
    pub fn build(m: i64, x_max: f64) -> Result<Self, BallError> {
        if m < 4 || m % 2 != 0 {
            return Err(BallError::BadDimension { m });
        }
        if x_max > super::bessel::X_MAX {
            return Err(BallError::CutoffInfeasible {
                t: 0.0,
                needed: x_max,
                available: super::bessel::X_MAX,
            });
        }
        let p_min = min_order(m);
        let mut orders = Vec::new();
        let mut p = p_min.max(1);
        loop {
            if f64::from(p) > super::bessel::NU_MAX || f64::from(p) >= x_max {
                break;
            }
            let zs = bessel_zeros(f64::from(p), x_max)?;
            if zs.is_empty() {
                break;
            }
            orders.push(zs);
            p += 1;
        }
        let table = ZeroTable {
            m,
            x_max,
            orders,
            p_min: p_min.max(1),
        };
        table.audit()?;
        Ok(table)
    }

    pub fn p_min(&self) -> u32 {
        self.p_min
    }

    pub fn max_order(&self) -> u32 {
        self.p_min + self.orders.len() as u32 - 1
    }

    pub fn zeros_of(&self, p: u32) -> Option<&[f64]> {
        if p < self.p_min {
            return None;
        }
        self.orders.get((p - self.p_min) as usize).map(|v| &v[..])
    }

    pub fn total_zeros(&self) -> usize {
        self.orders.iter().map(|v| v.len()).sum()
    }

    /// Residual and interlacing audit:
    /// each zero satisfies |J_p| ≤ 1e−12·max(1, |J'_p|); per order the list
    /// is strictly increasing; across consecutive orders
    /// j_{p,k} < j_{p+1,k} < j_{p,k+1}.
    pub fn audit(&self) -> Result<(), BallError> {
        for (i, zs) in self.orders.iter().enumerate() {
            let p = f64::from(self.p_min + i as u32);
            for (k, &z) in zs.iter().enumerate() {
                let (j, jp) = bessel_j_prime(p, z)?;
                if j.abs() > 1e-12 * jp.abs().max(1.0) {
                    return Err(BallError::CacheCorrupt(format!(
                        "residual |J_{p}({z})| = {:.3e} too large",
                        j.abs()
                    )));
                }
                if k > 0 && zs[k - 1] >= z {
                    return Err(BallError::CacheCorrupt(format!(
                        "zeros of order {p} not increasing at k = {k}"
                    )));
                }
            }
        }
        for i in 0..self.orders.len().saturating_sub(1) {
            let lower = &self.orders[i];
            let upper = &self.orders[i + 1];
            for (k, &z) in upper.iter().enumerate() {
                if k < lower.len() && !(lower[k] < z) {
                    return Err(BallError::CacheCorrupt(format!(
                        "interlacing j_{{p,{k}}} < j_{{p+1,{k}}} fails at order index {i}"
                    )));
                }
                if k + 1 < lower.len() && !(z < lower[k + 1]) {
                    return Err(BallError::CacheCorrupt(format!(
                        "interlacing j_{{p+1,{k}}} < j_{{p,{}}} fails at order index {i}",
                        k + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn file_name(m: i64, x_max: f64) -> String {
        format!("zeros-m{m}-x{x_max}.txt")
    }

    /// Write the cache file (header + one `p k zero` record per zero).
    pub fn save(&self, dir: &Path) -> Result<PathBuf, BallError> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(Self::file_name(self.m, self.x_max));
        let mut w = BufWriter::new(std::fs::File::create(&path)?);
        writeln!(w, "heatspec-zeros v1 m={} xmax={}", self.m, self.x_max)?;
        for (i, zs) in self.orders.iter().enumerate() {
            let p = self.p_min + i as u32;
            for (k, z) in zs.iter().enumerate() {
                writeln!(w, "{p} {} {:.16e}", k + 1, z)?;
            }
        }
        w.flush()?;
        Ok(path)
    }

    /// Read a cache file back, verifying header and layout; the numeric
    /// audit is the caller's choice (see [`ZeroTable::load_or_build`]).
    pub fn load(dir: &Path, m: i64, x_max: f64) -> Result<Self, BallError> {
        let path = dir.join(Self::file_name(m, x_max));
        let file = std::fs::File::open(&path)?;
        let mut lines = std::io::BufReader::new(file).lines();
        let header = lines
            .next()
            .ok_or_else(|| BallError::CacheCorrupt("empty file".into()))??;
        let want = format!("heatspec-zeros v1 m={m} xmax={x_max}");
        if header != want {
            return Err(BallError::CacheCorrupt(format!(
                "header mismatch: got `{header}`, want `{want}`"
            )));
        }
        let p_min = min_order(m).max(1);
        let mut orders: Vec<Vec<f64>> = Vec::new();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(BallError::CacheCorrupt(format!("short record `{line}`")));
            }
            let p: u32 = fields[0]
                .parse()
                .map_err(|e| BallError::CacheCorrupt(format!("bad order: {e}")))?;
            let k: usize = fields[1]
                .parse()
                .map_err(|e| BallError::CacheCorrupt(format!("bad index: {e}")))?;
            let z: f64 = fields[2]
                .parse()
                .map_err(|e| BallError::CacheCorrupt(format!("bad zero: {e}")))?;
            if p < p_min {
                return Err(BallError::CacheCorrupt(format!("order {p} below minimum")));
            }
            let idx = (p - p_min) as usize;
            if idx == orders.len() {
                orders.push(Vec::new());
            }
            if idx >= orders.len() || orders[idx].len() + 1 != k {
                return Err(BallError::CacheCorrupt(format!(
                    "record out of sequence: p={p} k={k}"
                )));
            }
            orders[idx].push(z);
        }
        Ok(ZeroTable {
            m,
            x_max,
            orders,
            p_min,
        })
    }

    /// Load an audited table from the cache, or build and cache one.
    /// The status reports whether a corrupt or missing cache forced a build.
    pub fn load_or_build(dir: &Path, m: i64, x_max: f64) -> Result<(Self, CacheStatus), BallError> {
        let status = match Self::load(dir, m, x_max) {
            Ok(t) => {
                if t.audit().is_ok() {
                    return Ok((t, CacheStatus::Loaded));
                }
                CacheStatus::RebuiltAfterCorruption
            }
            Err(BallError::CacheIo(_)) => CacheStatus::BuiltFresh,
            Err(_) => CacheStatus::RebuiltAfterCorruption,
        };
        let t = Self::build(m, x_max)?;
        t.save(dir)?;
        Ok((t, status))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Loaded,
    BuiltFresh,
    RebuiltAfterCorruption,
}

/// Cache directory from `HEATSPEC_CACHE_DIR`, defaulting to `./cache`.
pub fn cache_dir() -> PathBuf {
    std::env::var_os("HEATSPEC_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("./cache"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros_of_low_orders() {
        let z = bessel_zeros(1.0, 10.0).unwrap();
        assert_eq!(z.len(), 2);
        assert!((z[0] - 3.83170597020751232).abs() < 1e-12);
        assert!((z[1] - 7.01558666981561875).abs() < 1e-12);
        let z2 = bessel_zeros(2.0, 6.0).unwrap();
        assert!((z2[0] - 5.13562230184068256).abs() < 1e-12);
    }

    #[test]
    fn zero_count_spacing_bound() {
        // zeros are spaced by more than π, so at most (x_max − p)/π + 1
        for p in [1.0f64, 5.0, 20.0] {
            let x_max = 80.0;
            let z = bessel_zeros(p, x_max).unwrap();
            let bound = (x_max - p) / std::f64::consts::PI + 1.0;
            assert!((z.len() as f64) <= bound, "p={p}: {} zeros", z.len());
        }
    }

    #[test]
    fn empty_below_order() {
        assert!(bessel_zeros(30.0, 25.0).unwrap().is_empty());
    }

    #[test]
    fn table_build_and_audit() {
        let t = ZeroTable::build(4, 40.0).unwrap();
        assert_eq!(t.p_min(), 1);
        assert!(t.max_order() >= 30);
        assert!(t.zeros_of(1).unwrap().len() >= 11);
        t.audit().unwrap();
    }

    #[test]
    fn cache_round_trip_is_bit_identical() {
        let dir = std::env::temp_dir().join(format!("heatspec-test-{}", std::process::id()));
        let t = ZeroTable::build(4, 30.0).unwrap();
        t.save(&dir).unwrap();
        let r = ZeroTable::load(&dir, 4, 30.0).unwrap();
        for p in t.p_min()..=t.max_order() {
            assert_eq!(t.zeros_of(p).unwrap(), r.zeros_of(p).unwrap(), "order {p}");
        }
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn corruption_detected() {
        let dir = std::env::temp_dir().join(format!("heatspec-test-c-{}", std::process::id()));
        let t = ZeroTable::build(4, 20.0).unwrap();
        let path = t.save(&dir).unwrap();
        let mut content = std::fs::read_to_string(&path).unwrap();
        // corrupt one digit of the first zero record
        content = content.replacen("3.83170", "3.93170", 1);
        std::fs::write(&path, content).unwrap();
        let r = ZeroTable::load(&dir, 4, 20.0).unwrap();
        assert!(r.audit().is_err());
        // load_or_build detects the corruption and rebuilds
        let (rebuilt, status) = ZeroTable::load_or_build(&dir, 4, 20.0).unwrap();
        assert_eq!(status, CacheStatus::RebuiltAfterCorruption);
        rebuilt.audit().unwrap();
        std::fs::remove_dir_all(&dir).ok();
    }
}
