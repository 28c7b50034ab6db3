use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{shifted_eigenvalue, x0_apply_q, OperatorSpec};
use crate::coeffs::{cf, Coeff, Symbol};
use crate::error::{Error, Result};
use crate::partitions::{dominating, Partition};
use crate::symfunc::{Basis, SymFunc};

/// A solved eigenvector `Q_λ = Σ_{μ ≥ λ} C_{λμ} q^ε_μ` with `C_{λλ} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenResult {
    pub lambda: Partition,
    /// Expansion in the `q^ε` basis.
    pub q: SymFunc,
    pub eigenvalue: Coeff,
    /// Eigenvalue of `X'_0 = (X_0 - 1)/(1 - a)`, when `1 - a ≠ 0`.
    pub shifted: Option<Coeff>,
    pub spec: String,
}

impl EigenResult {
    pub fn coefficient(&self, mu: &Partition) -> Coeff {
        self.q.coeff(mu)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "lambda {:?}  spec {}\neigenvalue {}\n",
            self.lambda, self.spec, self.eigenvalue
        );
        if let Some(x) = &self.shifted {
            s.push_str(&format!("eigenvalue of X0' {x}\n"));
        }
        s.push_str(&self.q.to_text());
        s
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
struct EigenRepr {
    lambda: Partition,
    eigenvalue: Coeff,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eigenvalue_prime: Option<Coeff>,
    terms: Vec<TermRepr>,
    spec: String,
}

impl Serialize for EigenResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EigenRepr {
            lambda: self.lambda.clone(),
            eigenvalue: self.eigenvalue.clone(),
            eigenvalue_prime: self.shifted.clone(),
            terms: self
                .q
                .terms()
                .iter()
                .map(|(k, c)| TermRepr {
                    partition: k.clone(),
                    coeff: c.clone(),
                })
                .collect(),
            spec: self.spec.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EigenResult {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = EigenRepr::deserialize(deserializer)?;
        Ok(EigenResult {
            lambda: r.lambda,
            q: SymFunc::from_terms(Basis::Q, r.terms.into_iter().map(|t| (t.partition, t.coeff))),
            eigenvalue: r.eigenvalue,
            shifted: r.eigenvalue_prime,
            spec: r.spec,
        })
    }
}

/// Solves `X_0 Q_λ = c_λλ Q_λ` by
/// `C_{λν} = Σ_{ν > μ ≥ λ} C_{λμ} c_{μν} / (c_λλ - c_νν)`, visiting `ν ≥ λ`
/// from the bottom of the dominance order upward, then verifies the result.
pub fn solve_q(lambda: &Partition, spec: &OperatorSpec) -> Result<EigenResult> {
    let above = dominating(lambda);
    let rows: Vec<SymFunc> = above.iter().map(|mu| x0_apply_q(mu, spec)).collect();
    let diag = |i: usize| rows[i].coeff(&above[i]);
    let top = above.len() - 1;
    debug_assert_eq!(&above[top], lambda);
    let c_ll = diag(top);

    let mut coeffs: Vec<Option<Coeff>> = vec![None; above.len()];
    coeffs[top] = Some(Coeff::one());
    for v in (0..top).rev() {
        let nu = &above[v];
        let mut num = Coeff::zero();
        for (m, c_lm) in coeffs.iter().enumerate() {
            if let Some(c_lm) = c_lm {
                let c_mn = rows[m].coeff(nu);
                if !c_mn.is_zero() {
                    num += &(c_lm * &c_mn);
                }
            }
        }
        let den = &c_ll - &diag(v);
        if den.is_zero() {
            return Err(Error::EigenvalueCollision(lambda.clone(), nu.clone()));
        }
        coeffs[v] = Some(&num / &den);
    }

    let q = SymFunc::from_terms(
        Basis::Q,
        above
            .iter()
            .cloned()
            .zip(coeffs.into_iter().map(|c| c.expect("every coefficient solved"))),
    );
    let mut image = SymFunc::zero(Basis::Q);
    for (i, mu) in above.iter().enumerate() {
        let c = q.coeff(mu);
        if !c.is_zero() {
            image = &image + &rows[i].scale(&c);
        }
    }
    if image != q.scale(&c_ll) {
        return Err(Error::VerificationFailed(format!(
            "X0 Q_{lambda:?} is not a multiple of Q_{lambda:?}"
        )));
    }
    Ok(EigenResult {
        lambda: lambda.clone(),
        shifted: shifted_eigenvalue(&c_ll, spec.a()),
        eigenvalue: c_ll,
        q,
        spec: "generic".to_string(),
    })
}

/// Substitutions of `(a, b, c)` recovering classical families.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `a = t, b = c = 1/q`.
    MacdonaldA,
    /// `b = q, c = t, a = 1/t`.
    MacdonaldB,
    /// `MacdonaldB` followed by `q = 0`.
    HallLittlewood,
    /// `b = c = 1/a`.
    Schur,
}

impl Specialization {
    pub const ALL: [Specialization; 4] = [
        Specialization::MacdonaldA,
        Specialization::MacdonaldB,
        Specialization::HallLittlewood,
        Specialization::Schur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::MacdonaldA => "macdonaldA",
            Specialization::MacdonaldB => "macdonaldB",
            Specialization::HallLittlewood => "hl",
            Specialization::Schur => "schur",
        }
    }

    /// Substitution stages, applied in order.
    fn stages(self) -> Vec<Vec<(Symbol, Coeff)>> {
        let b_stage = vec![
            (Symbol::B, cf("q")),
            (Symbol::C, cf("t")),
            (Symbol::A, cf("1/t")),
        ];
        match self {
            Specialization::MacdonaldA => vec![vec![
                (Symbol::A, cf("t")),
                (Symbol::B, cf("1/q")),
                (Symbol::C, cf("1/q")),
            ]],
            Specialization::MacdonaldB => vec![b_stage],
            Specialization::HallLittlewood => vec![b_stage, vec![(Symbol::Q, Coeff::zero())]],
            Specialization::Schur => vec![vec![(Symbol::B, cf("1/a")), (Symbol::C, cf("1/a"))]],
        }
    }

    pub fn apply(self, x: &Coeff) -> Result<Coeff> {
        let mut v = x.clone();
        for stage in self.stages() {
            v = v.substitute(&stage)?;
        }
        Ok(v)
    }
}

impl FromStr for Specialization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "macdonaldA" | "A" => Ok(Specialization::MacdonaldA),
            "macdonaldB" | "B" => Ok(Specialization::MacdonaldB),
            "hl" | "hall_littlewood" | "C" => Ok(Specialization::HallLittlewood),
            "schur" | "D" => Ok(Specialization::Schur),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Applies a specialization to every coefficient of a generic result.
pub fn specialize_q(result: &EigenResult, which: Specialization) -> Result<EigenResult> {
    let q = result.q.map_coeffs(|c| which.apply(c))?;
    let shifted = match &result.shifted {
        Some(x) => which.apply(x).ok(),
        None => None,
    };
    Ok(EigenResult {
        lambda: result.lambda.clone(),
        q,
        eigenvalue: which.apply(&result.eigenvalue)?,
        shifted,
        spec: which.name().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::eigenvalue;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn solve_examples() {
        let spec = OperatorSpec::generic();
        let r2 = solve_q(&p("2"), &spec).unwrap();
        assert_eq!(r2.q, SymFunc::basis_element(Basis::Q, p("2")));
        assert_eq!(r2.eigenvalue, cf("1+(1-a)*(b^2-1)"));
        let r11 = solve_q(&p("1,1"), &spec).unwrap();
        assert_eq!(r11.coefficient(&p("1,1")), Coeff::one());
        assert_eq!(r11.coefficient(&p("2")), cf("(1-a)*(1+b)/(a-b)"));
        assert_eq!(r11.eigenvalue, eigenvalue(&p("1,1"), &spec));
        let r1 = solve_q(&p("1"), &spec).unwrap();
        assert_eq!(r1.q, SymFunc::basis_element(Basis::Q, p("1")));
    }

    #[test]
    fn specialization_examples() {
        let spec = OperatorSpec::generic();
        let r11 = solve_q(&p("1,1"), &spec).unwrap();
        let schur = specialize_q(&r11, Specialization::Schur).unwrap();
        assert_eq!(schur.coefficient(&p("2")), Coeff::from_int(-1));
        let a = specialize_q(&r11, Specialization::MacdonaldA).unwrap();
        assert_eq!(a.coefficient(&p("2")), cf("(1-t)*(1+q)/(q*t-1)"));
        let b = specialize_q(&r11, Specialization::MacdonaldB).unwrap();
        assert_eq!(a.q, b.q);
        let r1 = solve_q(&p("1"), &spec).unwrap();
        let e = specialize_q(&r1, Specialization::MacdonaldA).unwrap();
        assert_eq!(e.eigenvalue, cf("1+(1-t)*(1/q-1)"));
    }

    #[test]
    fn json_round_trip() {
        let spec = OperatorSpec::generic();
        let r = solve_q(&p("2,1"), &spec).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: EigenResult = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["spec"], "generic");
        assert_eq!(v["lambda"], serde_json::json!([2, 1]));
    }
}
