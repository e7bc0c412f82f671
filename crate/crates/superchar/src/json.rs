//! JSON interchange types. Rationals travel as "p/q" strings; every emitted
//! document re-parses to an equal value.

use serde::{Deserialize, Serialize};

use crate::datum::{AlgebraDesc, RootDatum};
use crate::error::Error;
use crate::rat::{fmt_rat, parse_rat};
use crate::weight::Weight;
use crate::xi::{RingElement, XiCoeff};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WeightJson {
    pub eps: Vec<String>,
    pub delta: Vec<String>,
}

impl WeightJson {
    pub fn from_weight(w: &Weight) -> Self {
        WeightJson {
            eps: w.eps.iter().map(fmt_rat).collect(),
            delta: w.delta.iter().map(fmt_rat).collect(),
        }
    }

    pub fn to_weight(&self, datum: &RootDatum) -> Result<Weight, Error> {
        let conv = |v: &[String]| -> Result<Vec<_>, Error> {
            v.iter()
                .map(|s| parse_rat(s).map_err(Error::DatumMismatch))
                .collect()
        };
        let w = Weight {
            eps: conv(&self.eps)?,
            delta: conv(&self.delta)?,
        };
        datum.check_weight(&w)?;
        Ok(w)
    }
}

/// Parse a weight given either as JSON or as a bare coordinate list like
/// `1,0|-1` (ε block, then optional δ block).
pub fn parse_weight(datum: &RootDatum, s: &str) -> Result<Weight, Error> {
    let s = s.trim();
    if s.starts_with('{') {
        let wj: WeightJson = serde_json::from_str(s)?;
        return wj.to_weight(datum);
    }
    let (eps_part, delta_part) = match s.split_once('|') {
        Some((a, b)) => (a, b),
        None => (s, ""),
    };
    let parse_list = |part: &str| -> Result<Vec<_>, Error> {
        part.trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| parse_rat(t).map_err(Error::DatumMismatch))
            .collect()
    };
    let w = Weight {
        eps: parse_list(eps_part)?,
        delta: parse_list(delta_part)?,
    };
    datum.check_weight(&w)?;
    Ok(w)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub weight: WeightJson,
    /// [a, b] encodes a + bξ.
    pub coeff: [i64; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementJson {
    pub algebra: AlgebraDesc,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn from_element(x: &RingElement) -> Self {
        ElementJson {
            algebra: x.algebra(),
            terms: x
                .terms()
                .map(|(w, c)| TermJson {
                    weight: WeightJson::from_weight(w),
                    coeff: [c.a, c.b],
                })
                .collect(),
        }
    }

    pub fn to_element(&self, datum: &RootDatum) -> Result<RingElement, Error> {
        if self.algebra != datum.descriptor() {
            return Err(Error::DatumMismatch(format!(
                "element is over {}, expected {}",
                self.algebra,
                datum.descriptor()
            )));
        }
        let mut out = RingElement::zero(datum);
        for t in &self.terms {
            out.add_term(
                t.weight.to_weight(datum)?,
                XiCoeff::new(t.coeff[0], t.coeff[1]),
            );
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_frac;
    use crate::xi::XI;

    #[test]
    fn weight_round_trip() {
        let d = RootDatum::build(AlgebraDesc::parse("gl(2|1)").unwrap()).unwrap();
        let w = Weight {
            eps: vec![rat_frac(1, 2), rat_frac(-3, 4)],
            delta: vec![rat_frac(5, 1)],
        };
        let j = WeightJson::from_weight(&w);
        assert_eq!(j.to_weight(&d).unwrap(), w);
        let s = serde_json::to_string(&j).unwrap();
        let back: WeightJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_weight(&d).unwrap(), w);
        assert_eq!(parse_weight(&d, "1/2,-3/4|5").unwrap(), w);
    }

    #[test]
    fn element_round_trip() {
        let d = RootDatum::build(AlgebraDesc::parse("gl(1|1)").unwrap()).unwrap();
        let mut x = RingElement::monomial(&d, d.eps(0), XiCoeff::int(2));
        x.add_term(d.delta(0), XI);
        let j = ElementJson::from_element(&x);
        let s = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_element(&d).unwrap(), x);
    }
}
