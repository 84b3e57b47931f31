//! Rationals as JSON strings (`"-3/4"`, `"7"`), for `#[serde(with = ...)]`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

use super::Rational;

pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d == 0.into() {
                return None;
            }
            Some(Rational::new(n.trim().parse().ok()?, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse(&s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse(s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn parsing() {
        assert_eq!(parse("-6/4"), Some(ratio(-3, 2)));
        assert_eq!(parse(" 12 "), Some(rat(12)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
