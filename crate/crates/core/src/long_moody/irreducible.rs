use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::laurent::FieldSpecialization;
use crate::matrix::FpMatrix;
use crate::reps::PolyRep;

/// Dense `d × d` matrix over `F_p` with entries in `[0, p)`.
#[derive(Clone)]
struct ModMat {
    d: usize,
    a: Vec<u64>,
}

impl ModMat {
    fn from_fp(m: &FpMatrix) -> Self {
        ModMat { d: m.rows(), a: m.entries().iter().map(|e| e.value() as u64).collect() }
    }

    fn identity(d: usize) -> Self {
        let mut a = vec![0; d * d];
        for i in 0..d {
            a[i * d + i] = 1;
        }
        ModMat { d, a }
    }

    fn mul(&self, o: &ModMat, p: u64) -> ModMat {
        let d = self.d;
        let mut out = vec![0u64; d * d];
        for i in 0..d {
            for k in 0..d {
                let x = self.a[i * d + k];
                if x == 0 {
                    continue;
                }
                let row = &o.a[k * d..(k + 1) * d];
                let dst = &mut out[i * d..(i + 1) * d];
                for (c, &y) in dst.iter_mut().zip(row) {
                    *c = (*c + x * y) % p;
                }
            }
        }
        ModMat { d, a: out }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Echelon basis of a subspace of `F_p^m`. Each stored row has a unit at
/// its pivot and zeros at the pivots of the rows stored before it.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    /// Reduces `v` and keeps it when independent; returns whether it was
    /// kept.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (piv, r) in &self.rows {
            let c = v[*piv];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(r) {
                *x = (*x + (p - c) * y % p) % p;
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(v[piv], p - 2, p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        self.rows.push((piv, v));
        true
    }
}

/// Dimension of the unital algebra generated by `gens` inside `M_d(F_p)`.
pub fn span_dimension(gens: &[FpMatrix], d: usize, p: u64) -> usize {
    let gens: Vec<ModMat> = gens.iter().map(ModMat::from_fp).collect();
    let mut basis = Echelon { p, rows: vec![] };
    let id = ModMat::identity(d);
    basis.insert(id.a.clone());
    let mut queue = vec![id];
    while let Some(a) = queue.pop() {
        if basis.rows.len() == d * d {
            break;
        }
        for g in &gens {
            let b = a.mul(g, p);
            if basis.insert(b.a.clone()) {
                queue.push(b);
            }
        }
    }
    basis.rows.len()
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeTrial {
    pub values: Vec<(String, i64)>,
    pub span_dim: usize,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub rep: String,
    pub dim: usize,
    pub prime: u64,
    pub trials: Vec<ProbeTrial>,
}

impl ProbeReport {
    /// One specialization with full span certifies absolute irreducibility
    /// at the generic point.
    pub fn irreducible(&self) -> bool {
        self.trials.iter().any(|t| t.span_dim == self.dim * self.dim)
    }

    pub fn max_span(&self) -> usize {
        self.trials.iter().map(|t| t.span_dim).max().unwrap_or(0)
    }
}

/// Specializes every ring variable to a random nonzero element of `F_p` and
/// measures the span of the generated matrix algebra. Stops at the first
/// full-span trial.
pub fn irreducibility_probe(rep: &PolyRep, p: u64, trials: usize, seed: u64) -> Result<ProbeReport> {
    if !is_prime(p) {
        return Err(Error::Degenerate(format!("{p} is not prime")));
    }
    let ctx = rep.ctx().cloned().ok_or_else(|| Error::Degenerate("representation has no ring context".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rep.dim();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < trials {
        attempts += 1;
        if attempts > 20 * trials.max(1) {
            return Err(Error::Degenerate("no admissible specialization found".into()));
        }
        let values: Vec<(String, i64)> = ctx.names().iter().map(|n| (n.clone(), rng.gen_range(1..p) as i64)).collect();
        let pairs: Vec<(&str, i64)> = values.iter().map(|(n, v)| (n.as_str(), *v)).collect();
        let fs = FieldSpecialization::new(&ctx, p, &pairs)?;
        let Ok(frep) = rep.to_field(&fs) else { continue };
        let gens: Vec<FpMatrix> = (1..rep.strands()).map(|i| frep.sigma(i).clone()).collect();
        if gens.iter().zip(1..).any(|(g, i)| !g.try_mul(frep.sigma_inv(i)).is_ok_and(|m| m.is_identity())) {
            continue;
        }
        let span_dim = span_dimension(&gens, d, p);
        let full = span_dim == d * d;
        out.push(ProbeTrial { values, span_dim });
        if full {
            break;
        }
    }
    Ok(ProbeReport { rep: rep.name().to_string(), dim: d, prime: p, trials: out })
}
