//! Parameter sequences `n ↦ x_n` and the ε sequences that define the
//! deformed scalar product.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use crate::coeffs::{cf, Coeff, Symbol};
use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::SymFunc;

type Rule = dyn Fn(usize) -> Coeff + Send + Sync;

/// A memoized rule `n ↦ Coeff` for `n ≥ 0`.
#[derive(Clone)]
pub struct CoeffSeq {
    name: Arc<str>,
    rule: Arc<Rule>,
    memo: Arc<RwLock<HashMap<usize, Coeff>>>,
}

impl CoeffSeq {
    pub fn new(name: impl Into<String>, rule: impl Fn(usize) -> Coeff + Send + Sync + 'static) -> Self {
        CoeffSeq {
            name: Arc::from(name.into()),
            rule: Arc::new(rule),
            memo: Arc::default(),
        }
    }

    pub fn from_values(name: impl Into<String>, values: Vec<Coeff>) -> Self {
        CoeffSeq::new(name, move |n| values.get(n).cloned().unwrap_or_default())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn get(&self, n: usize) -> Coeff {
        if let Some(v) = self.memo.read().expect("memo lock").get(&n) {
            return v.clone();
        }
        let v = (self.rule)(n);
        self.memo
            .write()
            .expect("memo lock")
            .entry(n)
            .or_insert(v)
            .clone()
    }

    /// `Π_i x_{λ_i}`.
    pub fn product_over(&self, lambda: &Partition) -> Coeff {
        lambda.parts().iter().map(|&p| self.get(p)).product()
    }

    /// A copy with `x_n ↦ x_n + delta` at one index.
    pub fn perturbed(&self, n: usize, delta: Coeff) -> CoeffSeq {
        let base = self.clone();
        CoeffSeq::new(format!("{}+perturbed[{n}]", self.name), move |k| {
            let v = base.get(k);
            if k == n {
                &v + &delta
            } else {
                v
            }
        })
    }
}

impl fmt::Debug for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffSeq({})", self.name)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EpsPreset {
    /// `ε_n = 1` (Schur).
    Ones,
    /// `ε_n = α`.
    Jack,
    /// `ε_n = 1/(1 - t^n)`.
    HallLittlewood,
    /// `ε_n = (1 - q^n)/(1 - t^n)`.
    Macdonald,
    /// `ε_n = (b^n - 1) c^{-n} / (1 - a^n)`.
    Abc,
}

impl EpsPreset {
    pub const ALL: [EpsPreset; 5] = [
        EpsPreset::Ones,
        EpsPreset::Jack,
        EpsPreset::HallLittlewood,
        EpsPreset::Macdonald,
        EpsPreset::Abc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EpsPreset::Ones => "ones",
            EpsPreset::Jack => "jack",
            EpsPreset::HallLittlewood => "hl",
            EpsPreset::Macdonald => "macdonald",
            EpsPreset::Abc => "abc",
        }
    }

    fn value(self, n: usize) -> Coeff {
        let n = n as i64;
        match self {
            EpsPreset::Ones => Coeff::one(),
            EpsPreset::Jack => Coeff::symbol(Symbol::Alpha),
            EpsPreset::HallLittlewood => cf(&format!("1/(1 - t^{n})")),
            EpsPreset::Macdonald => cf(&format!("(1 - q^{n})/(1 - t^{n})")),
            EpsPreset::Abc => cf(&format!("(b^{n} - 1)/((1 - a^{n})*c^{n})")),
        }
    }
}

impl FromStr for EpsPreset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ones" | "schur" => Ok(EpsPreset::Ones),
            "jack" => Ok(EpsPreset::Jack),
            "hl" | "hall_littlewood" => Ok(EpsPreset::HallLittlewood),
            "macdonald" => Ok(EpsPreset::Macdonald),
            "abc" => Ok(EpsPreset::Abc),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

impl fmt::Display for EpsPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Default)]
struct EpsCaches {
    eps_lambda: RwLock<HashMap<Partition, Coeff>>,
    q_lambda: RwLock<HashMap<Partition, Arc<SymFunc>>>,
}

/// The sequence `ε = (ε_1, ε_2, …)` with `ε_0 = 1`. Clones share the memo
/// tables for `ε_λ` and the p-expansions of `q^ε_λ`.
#[derive(Clone)]
pub struct EpsSequence {
    preset: Option<EpsPreset>,
    seq: CoeffSeq,
    caches: Arc<EpsCaches>,
}

impl EpsSequence {
    pub fn preset(p: EpsPreset) -> Self {
        EpsSequence {
            preset: Some(p),
            seq: CoeffSeq::new(p.name(), move |n| p.value(n)),
            caches: Arc::default(),
        }
    }

    pub fn ones() -> Self {
        EpsSequence::preset(EpsPreset::Ones)
    }

    pub fn jack() -> Self {
        EpsSequence::preset(EpsPreset::Jack)
    }

    pub fn hall_littlewood() -> Self {
        EpsSequence::preset(EpsPreset::HallLittlewood)
    }

    pub fn macdonald() -> Self {
        EpsSequence::preset(EpsPreset::Macdonald)
    }

    pub fn abc() -> Self {
        EpsSequence::preset(EpsPreset::Abc)
    }

    /// An arbitrary rule; callers are responsible for `ε_n ≠ 0`
    /// (see [`EpsSequence::validate`]).
    pub fn custom(seq: CoeffSeq) -> Self {
        EpsSequence {
            preset: None,
            seq,
            caches: Arc::default(),
        }
    }

    pub fn preset_kind(&self) -> Option<EpsPreset> {
        self.preset
    }

    pub fn name(&self) -> &str {
        self.seq.name()
    }

    pub fn get(&self, n: usize) -> Coeff {
        if n == 0 {
            Coeff::one()
        } else {
            self.seq.get(n)
        }
    }

    /// Whether both handles share the same memo tables.
    pub fn same_as(&self, other: &EpsSequence) -> bool {
        Arc::ptr_eq(&self.caches, &other.caches)
    }

    pub fn as_seq(&self) -> &CoeffSeq {
        &self.seq
    }

    /// `ε_λ = Π ε_{λ_i}`.
    pub fn of_partition(&self, lambda: &Partition) -> Coeff {
        if let Some(v) = self.caches.eps_lambda.read().expect("lock").get(lambda) {
            return v.clone();
        }
        let v = self.seq.product_over(lambda);
        self.caches
            .eps_lambda
            .write()
            .expect("lock")
            .entry(lambda.clone())
            .or_insert(v)
            .clone()
    }

    /// Checks `ε_n ≠ 0` for `1 ≤ n ≤ upto`.
    pub fn validate(&self, upto: usize) -> Result<()> {
        for n in 1..=upto {
            if self.get(n).is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "eps_{n} vanishes for {}",
                    self.name()
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn cached_q(&self, lambda: &Partition) -> Option<Arc<SymFunc>> {
        self.caches.q_lambda.read().expect("lock").get(lambda).cloned()
    }

    pub(crate) fn store_q(&self, lambda: &Partition, f: SymFunc) -> Arc<SymFunc> {
        self.caches
            .q_lambda
            .write()
            .expect("lock")
            .entry(lambda.clone())
            .or_insert_with(|| Arc::new(f))
            .clone()
    }
}

impl fmt::Debug for EpsSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EpsSequence({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_values() {
        assert_eq!(EpsSequence::ones().get(3), Coeff::one());
        assert_eq!(EpsSequence::jack().get(2), cf("alpha"));
        assert_eq!(EpsSequence::hall_littlewood().get(2), cf("1/(1-t^2)"));
        assert_eq!(EpsSequence::macdonald().get(1), cf("(1-q)/(1-t)"));
        assert_eq!(EpsSequence::abc().get(2), cf("(b^2-1)/(c^2*(1-a^2))"));
        assert_eq!(EpsSequence::abc().get(0), Coeff::one());
        for p in EpsPreset::ALL {
            assert!(EpsSequence::preset(p).validate(8).is_ok());
            assert_eq!(p.name().parse::<EpsPreset>().unwrap(), p);
        }
        assert!(matches!("foo".parse::<EpsPreset>(), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn eps_of_partition_and_validation() {
        let e = EpsSequence::jack();
        let lam: Partition = "2,1,1".parse().unwrap();
        assert_eq!(e.of_partition(&lam), cf("alpha^3"));
        let bad = EpsSequence::custom(CoeffSeq::new("zero-at-2", |n| {
            Coeff::from_int(if n == 2 { 0 } else { 1 })
        }));
        assert!(bad.validate(1).is_ok());
        assert!(bad.validate(2).is_err());
    }

    #[test]
    fn perturbation_touches_one_index() {
        let s = CoeffSeq::new("n", |n| Coeff::from_int(n as i64));
        let p = s.perturbed(2, Coeff::one());
        assert_eq!(p.get(1), Coeff::from_int(1));
        assert_eq!(p.get(2), Coeff::from_int(3));
    }
}
