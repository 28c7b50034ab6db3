//! Per-degree transition matrices between power sums and monomials.
//!
//! `p_ρ = Σ_ν L[ρ][ν] m_ν` is built by multiplying out power sums; its inverse
//! `m_ν = Σ_ρ M[ν][ρ] p_ρ` comes from forward substitution, since `L` is
//! triangular with respect to dominance. Both are cached process-wide and,
//! when `SYMFN_CACHE_DIR` is set, on disk.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate, sort_to_partition, Partition};

pub const CACHE_ENV: &str = "SYMFN_CACHE_DIR";
const FORMAT_VERSION: u32 = 1;

#[derive(Debug)]
pub struct Transition {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Integer matrix `L[ρ][ν]`.
    pub p_to_m: Vec<Vec<BigInt>>,
    /// Rational matrix `M[ν][ρ]`, the inverse of `L`.
    pub m_to_p: Vec<Vec<BigRational>>,
}

impl Transition {
    fn build(degree: usize) -> Self {
        let partitions = enumerate(degree);
        let index = index_of(&partitions);
        let n = partitions.len();

        let mut p_to_m = vec![vec![BigInt::zero(); n]; n];
        for (r, rho) in partitions.iter().enumerate() {
            for (nu, c) in power_sum_in_monomials(rho) {
                p_to_m[r][index[&nu]] = c;
            }
        }

        // Partitions earlier in the list dominate later ones, so L is upper
        // triangular in this indexing.
        let mut m_to_p: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
        for r in 0..n {
            let diag = BigRational::from_integer(p_to_m[r][r].clone());
            let mut row = vec![BigRational::zero(); n];
            row[r] = BigRational::one();
            for nu in 0..r {
                let l = &p_to_m[r][nu];
                if l.is_zero() {
                    continue;
                }
                let l = BigRational::from_integer(l.clone());
                for (k, v) in m_to_p[nu].iter().enumerate() {
                    if !v.is_zero() {
                        row[k] -= &l * v;
                    }
                }
            }
            for v in row.iter_mut() {
                *v /= &diag;
            }
            m_to_p[r] = row;
        }

        Transition {
            degree,
            partitions,
            index,
            p_to_m,
            m_to_p,
        }
    }

    /// Sparse row of `M`: the p-expansion of `m_ν`.
    pub fn monomial_row(&self, nu: &Partition) -> impl Iterator<Item = (&Partition, &BigRational)> {
        let i = self.index[nu];
        self.m_to_p[i]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (&self.partitions[k], v))
    }

    pub fn idx(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }
}

fn index_of(partitions: &[Partition]) -> HashMap<Partition, usize> {
    partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect()
}

/// m-expansion of `p_ρ` with integer coefficients.
fn power_sum_in_monomials(rho: &Partition) -> HashMap<Partition, BigInt> {
    let mut f: HashMap<Partition, BigInt> = HashMap::from([(Partition::empty(), BigInt::one())]);
    for &k in rho.parts() {
        f = multiply_by_power_sum(&f, k);
    }
    f
}

/// `[x^ν] (p_k · f) = Σ_{i : ν_i ≥ k} [x^{ν - k e_i}] f`.
fn multiply_by_power_sum(f: &HashMap<Partition, BigInt>, k: usize) -> HashMap<Partition, BigInt> {
    let degree = f.keys().next().map_or(0, |p| p.weight()) + k;
    let mut out = HashMap::new();
    for nu in enumerate(degree) {
        let mut c = BigInt::zero();
        for i in 0..nu.len() {
            if nu.parts()[i] >= k {
                let mut v = nu.parts().to_vec();
                v[i] -= k;
                if let Some(x) = f.get(&sort_to_partition(&v)) {
                    c += x;
                }
            }
        }
        if !c.is_zero() {
            out.insert(nu, c);
        }
    }
    out
}

fn memory() -> &'static RwLock<HashMap<usize, Arc<Transition>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The transition data for degree `n`, built at most once per process (modulo
/// benign duplicate work under a race).
pub fn transition(n: usize) -> Arc<Transition> {
    if let Some(t) = memory().read().expect("transition cache").get(&n) {
        return t.clone();
    }
    let t = load_from_disk(n).unwrap_or_else(|| {
        let t = Transition::build(n);
        store_to_disk(&t);
        t
    });
    memory()
        .write()
        .expect("transition cache")
        .entry(n)
        .or_insert_with(|| Arc::new(t))
        .clone()
}

#[derive(Serialize, Deserialize)]
struct OnDisk {
    version: u32,
    degree: usize,
    partitions: Vec<Partition>,
    p_to_m: Vec<Vec<String>>,
    m_to_p: Vec<Vec<String>>,
}

fn cache_path(n: usize) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    if dir.is_empty() {
        return None;
    }
    Some(PathBuf::from(dir).join(format!("transition-v{FORMAT_VERSION}-{n}.json")))
}

fn load_from_disk(n: usize) -> Option<Transition> {
    let bytes = std::fs::read(cache_path(n)?).ok()?;
    let disk: OnDisk = serde_json::from_slice(&bytes).ok()?;
    let partitions = enumerate(n);
    if disk.version != FORMAT_VERSION || disk.degree != n || disk.partitions != partitions {
        return None;
    }
    let p_to_m = disk
        .p_to_m
        .iter()
        .map(|row| row.iter().map(|s| s.parse::<BigInt>().ok()).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let m_to_p = disk
        .m_to_p
        .iter()
        .map(|row| row.iter().map(|s| s.parse::<BigRational>().ok()).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let size = partitions.len();
    if p_to_m.len() != size
        || m_to_p.len() != size
        || p_to_m.iter().any(|r| r.len() != size)
        || m_to_p.iter().any(|r| r.len() != size)
    {
        return None;
    }
    Some(Transition {
        degree: n,
        index: index_of(&partitions),
        partitions,
        p_to_m,
        m_to_p,
    })
}

/// Best effort: a failed write only means the next run recomputes.
fn store_to_disk(t: &Transition) {
    let Some(path) = cache_path(t.degree) else {
        return;
    };
    let disk = OnDisk {
        version: FORMAT_VERSION,
        degree: t.degree,
        partitions: t.partitions.clone(),
        p_to_m: t
            .p_to_m
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect(),
        m_to_p: t
            .m_to_p
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect(),
    };
    let Ok(json) = serde_json::to_vec(&disk) else {
        return;
    };
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    if std::fs::write(&tmp, json).is_ok() && std::fs::rename(&tmp, &path).is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
}
