use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};
use crate::field::{Field, Fq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    V01,
    V02,
    V03,
    V04,
    V05,
    V11,
    V12,
    V13,
    V14,
    V15,
    V16,
    V17,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::V01,
        Family::V02,
        Family::V03,
        Family::V04,
        Family::V05,
        Family::V11,
        Family::V12,
        Family::V13,
        Family::V14,
        Family::V15,
        Family::V16,
        Family::V17,
    ];

    /// Parameter names in the order they are stored.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            Family::V01 | Family::V03 => &["beta", "a"],
            Family::V02 | Family::V05 => &["a", "b"],
            Family::V04 | Family::V17 => &["a"],
            Family::V11 => &["mu", "d"],
            Family::V12 | Family::V13 => &["theta"],
            Family::V14 | Family::V15 => &["c"],
            Family::V16 => &["c", "theta"],
        }
    }

    pub fn is_trigonometric(self) -> bool {
        matches!(
            self,
            Family::V11 | Family::V12 | Family::V13 | Family::V14 | Family::V15 | Family::V16 | Family::V17
        )
    }

    /// Dimension of the family over GF(p^m) for parameter `k` with even
    /// lift `k_lift` when `k` lies in the prime field.
    pub fn expected_dim(self, p: usize, k_lift: Option<usize>) -> usize {
        match self {
            Family::V01 | Family::V02 | Family::V03 | Family::V04 => 2,
            Family::V05 => 1,
            Family::V11 | Family::V12 | Family::V15 | Family::V17 => 2 * p,
            Family::V13 => p - k_lift.unwrap_or(0),
            Family::V14 => p + k_lift.unwrap_or(0),
            Family::V16 => p,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::BadParameter(format!("unknown family {s:?}")))
    }
}

/// A family together with its parameter values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    V01 { beta: Fq, a: Fq },
    V02 { a: Fq, b: Fq },
    V03 { beta: Fq, a: Fq },
    V04 { a: Fq },
    V05 { a: Fq, b: Fq },
    V11 { mu: Fq, d: Fq },
    V12 { theta: Fq },
    V13 { theta: Fq },
    V14 { c: Fq },
    V15 { c: Fq },
    V16 { c: Fq, theta: Fq },
    V17 { a: Fq },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::V01 { .. } => Family::V01,
            FamilyParams::V02 { .. } => Family::V02,
            FamilyParams::V03 { .. } => Family::V03,
            FamilyParams::V04 { .. } => Family::V04,
            FamilyParams::V05 { .. } => Family::V05,
            FamilyParams::V11 { .. } => Family::V11,
            FamilyParams::V12 { .. } => Family::V12,
            FamilyParams::V13 { .. } => Family::V13,
            FamilyParams::V14 { .. } => Family::V14,
            FamilyParams::V15 { .. } => Family::V15,
            FamilyParams::V16 { .. } => Family::V16,
            FamilyParams::V17 { .. } => Family::V17,
        }
    }

    /// Values in the order of [`Family::parameter_names`].
    pub fn values(&self) -> Vec<Fq> {
        match *self {
            FamilyParams::V01 { beta, a } | FamilyParams::V03 { beta, a } => vec![beta, a],
            FamilyParams::V02 { a, b } | FamilyParams::V05 { a, b } => vec![a, b],
            FamilyParams::V04 { a } | FamilyParams::V17 { a } => vec![a],
            FamilyParams::V11 { mu, d } => vec![mu, d],
            FamilyParams::V12 { theta } | FamilyParams::V13 { theta } => vec![theta],
            FamilyParams::V14 { c } | FamilyParams::V15 { c } => vec![c],
            FamilyParams::V16 { c, theta } => vec![c, theta],
        }
    }

    pub fn from_values(family: Family, v: &[Fq]) -> Result<Self> {
        let want = family.parameter_names().len();
        if v.len() != want {
            return Err(Error::BadParameter(format!("{family} takes {want} parameters, got {}", v.len())));
        }
        Ok(match family {
            Family::V01 => FamilyParams::V01 { beta: v[0], a: v[1] },
            Family::V02 => FamilyParams::V02 { a: v[0], b: v[1] },
            Family::V03 => FamilyParams::V03 { beta: v[0], a: v[1] },
            Family::V04 => FamilyParams::V04 { a: v[0] },
            Family::V05 => FamilyParams::V05 { a: v[0], b: v[1] },
            Family::V11 => FamilyParams::V11 { mu: v[0], d: v[1] },
            Family::V12 => FamilyParams::V12 { theta: v[0] },
            Family::V13 => FamilyParams::V13 { theta: v[0] },
            Family::V14 => FamilyParams::V14 { c: v[0] },
            Family::V15 => FamilyParams::V15 { c: v[0] },
            Family::V16 => FamilyParams::V16 { c: v[0], theta: v[1] },
            Family::V17 => FamilyParams::V17 { a: v[0] },
        })
    }
}

/// A family instance over fixed algebra parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RepSpec {
    params: AlgebraParams,
    family: FamilyParams,
}

fn is_sign(field: &Field, x: Fq) -> bool {
    x == Fq::ONE || x == field.from_int(-1)
}

/// The even lift of `k` in `[2, p-1]`, if `k` is such an element.
pub(crate) fn even_k(field: &Field, k: Fq) -> Option<u32> {
    field.lift(k).filter(|&n| n % 2 == 0 && n >= 2)
}

impl RepSpec {
    /// Validates the family constraints against the algebra parameters.
    pub fn new(params: &AlgebraParams, family: FamilyParams) -> Result<Self> {
        let spec = RepSpec { params: params.clone(), family };
        spec.validate()?;
        Ok(spec)
    }

    /// Skips the parameter constraints; the builder still insists on
    /// invertible X and on the defining relations.
    pub fn new_unchecked(params: &AlgebraParams, family: FamilyParams) -> Self {
        RepSpec { params: params.clone(), family }
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn family_params(&self) -> &FamilyParams {
        &self.family
    }

    pub fn family(&self) -> Family {
        self.family.family()
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        let f = p.field();
        let (t, k) = (p.t(), p.k());
        let bad = |msg: String| Err(Error::BadParameter(format!("{}: {msg}", self.family())));
        let fam = self.family();
        if fam.is_trigonometric() != (t == Fq::ONE) {
            return bad(format!("requires t = {}", if fam.is_trigonometric() { 1 } else { 0 }));
        }
        let nonzero = |name: &str, x: Fq| if x.is_zero() { bad(format!("{name} must be nonzero")) } else { Ok(()) };
        let sign = |name: &str, x: Fq| if is_sign(f, x) { Ok(()) } else { bad(format!("{name} must be 1 or -1")) };
        let k_zero = |want: bool| {
            if k.is_zero() == want {
                Ok(())
            } else {
                bad(format!("requires k {} 0", if want { "=" } else { "!=" }))
            }
        };
        match self.family {
            FamilyParams::V01 { beta, a } => {
                k_zero(false)?;
                nonzero("beta", beta)?;
                nonzero("a", a)
            }
            FamilyParams::V02 { a, .. } => {
                k_zero(false)?;
                sign("a", a)
            }
            FamilyParams::V03 { beta, a } => {
                k_zero(true)?;
                nonzero("beta", beta)?;
                nonzero("a", a)
            }
            FamilyParams::V04 { a } => {
                k_zero(true)?;
                if a.is_zero() || is_sign(f, a) {
                    return bad("a must avoid 0, 1 and -1".into());
                }
                Ok(())
            }
            FamilyParams::V05 { a, b } => {
                k_zero(true)?;
                sign("a", a)?;
                sign("b", b)
            }
            FamilyParams::V11 { mu, d } => {
                nonzero("d", d)?;
                if f.in_prime_field(mu) {
                    let j = f.lift(f.neg(mu)).expect("prime field element");
                    return bad(format!("mu + j vanishes for j = {j}"));
                }
                let half_k = f.div(k, f.from_int(2))?;
                for (sign, target) in [("", half_k), ("-", f.neg(half_k))] {
                    let diff = f.sub(mu, target);
                    if !diff.is_zero() && f.in_prime_field(diff) {
                        return bad(format!("mu differs from {sign}k/2 by a nonzero element of the prime field"));
                    }
                }
                Ok(())
            }
            FamilyParams::V12 { theta } => {
                if f.in_prime_field(k) {
                    return bad("requires k outside the prime field".into());
                }
                sign("theta", theta)
            }
            FamilyParams::V13 { theta: x } | FamilyParams::V14 { c: x } => {
                if even_k(f, k).is_none() {
                    return bad("requires k even with 2 <= k <= p-1".into());
                }
                sign(if fam == Family::V13 { "theta" } else { "c" }, x)
            }
            FamilyParams::V15 { .. } => {
                if even_k(f, k).is_none() {
                    return bad("requires k even with 2 <= k <= p-1".into());
                }
                Ok(())
            }
            FamilyParams::V16 { c, theta } => {
                k_zero(true)?;
                sign("c", c)?;
                sign("theta", theta)
            }
            FamilyParams::V17 { .. } => k_zero(true),
        }
    }

    /// Stable text key such as `V11(mu=[1,2],d=3)`.
    pub fn key(&self) -> String {
        let f = self.params.field();
        let fam = self.family();
        let parts: Vec<String> = fam
            .parameter_names()
            .iter()
            .zip(self.family.values())
            .map(|(n, v)| format!("{n}={}", f.format(v)))
            .collect();
        format!("{fam}({})", parts.join(","))
    }

    pub fn to_json(&self) -> Value {
        let f = self.params.field();
        let fam = self.family();
        let parameters: BTreeMap<&str, Vec<u32>> = fam
            .parameter_names()
            .iter()
            .copied()
            .zip(self.family.values().into_iter().map(|v| f.coeffs(v)))
            .collect();
        json!({
            "params": super::params_json(&self.params),
            "family": fam.to_string(),
            "parameters": parameters,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let params = super::params_from_json(value.get("params").ok_or_else(|| Error::Format("missing params".into()))?)?;
        let fam: Family = value
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Format("missing family".into()))?
            .parse()?;
        let parameters = value
            .get("parameters")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Format("missing parameters".into()))?;
        let f = params.field();
        let values = fam
            .parameter_names()
            .iter()
            .map(|name| {
                let raw = parameters
                    .get(*name)
                    .ok_or_else(|| Error::Format(format!("missing parameter {name}")))?;
                let coeffs: Vec<u32> =
                    serde_json::from_value(raw.clone()).map_err(|e| Error::Format(e.to_string()))?;
                f.from_canonical_coeffs(&coeffs)
            })
            .collect::<Result<Vec<_>>>()?;
        RepSpec::new(&params, FamilyParams::from_values(fam, &values)?)
    }

    /// Parses `FAMILY` or `FAMILY:key=value;key=value` with field literals
    /// as values (`3`, `-1`, or `c0,c1` for extension fields).
    pub fn parse_inline(params: &AlgebraParams, text: &str) -> Result<Self> {
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let fam: Family = name.parse()?;
        let mut given: BTreeMap<String, Fq> = BTreeMap::new();
        for pair in rest.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = pair
                .split_once('=')
                .ok_or_else(|| Error::BadParameter(format!("expected key=value, got {pair:?}")))?;
            given.insert(key.trim().to_string(), params.field().parse_literal(val)?);
        }
        Self::from_named(params, fam, &given)
    }

    /// Builds a spec from named parameter values; unknown names are errors.
    pub fn from_named(params: &AlgebraParams, fam: Family, given: &BTreeMap<String, Fq>) -> Result<Self> {
        let names = fam.parameter_names();
        if let Some(extra) = given.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::BadParameter(format!("{fam} has no parameter {extra:?}")));
        }
        let values = names
            .iter()
            .map(|n| {
                given
                    .get(*n)
                    .copied()
                    .ok_or_else(|| Error::BadParameter(format!("{fam} needs parameter {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        RepSpec::new(params, FamilyParams::from_values(fam, &values)?)
    }
}
