//! JSON problem files.

use jkres::linalg::parse_rational;
use jkres::{Configuration, MonomialOrder, Polynomial, QVector, Rational};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// A rational given either as a JSON integer or as a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            RationalText::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalText::Text(t) => parse_rational(t).map_err(CliError::from),
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    pub vectors: Option<Vec<Vec<RationalText>>>,
    pub epsilon: Option<Vec<RationalText>>,
    pub polynomial: Option<String>,
    pub order: Option<String>,
    pub numerator: Option<String>,
    pub denominators: Option<Vec<String>>,
    /// Generator list for `groebner` and `normal-form`.
    pub generators: Option<Vec<String>>,
    /// Number of variables when it cannot be read off the vectors.
    pub variables: Option<usize>,
}

/// Either one problem or a batch; the flag tells which.
pub fn parse_document(text: &str) -> Result<(Vec<Problem>, bool), CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("invalid JSON: {e}")))?;
    let decode = |v: Value| serde_json::from_value::<Problem>(v).map_err(|e| CliError::Parse(format!("bad problem: {e}")));
    match value {
        Value::Array(items) => Ok((items.into_iter().map(decode).collect::<Result<_, _>>()?, true)),
        other => Ok((vec![decode(other)?], false)),
    }
}

impl Problem {
    fn field<'a, T>(value: &'a Option<T>, name: &str) -> Result<&'a T, CliError> {
        value
            .as_ref()
            .ok_or_else(|| CliError::Parse(format!("missing field `{name}`")))
    }

    pub fn order(&self) -> Result<MonomialOrder, CliError> {
        match &self.order {
            None => Ok(MonomialOrder::default()),
            Some(name) => name
                .parse()
                .map_err(|_| CliError::Parse(format!("unknown order `{name}` (expected lex, grlex or grevlex)"))),
        }
    }

    pub fn configuration(&self) -> Result<Configuration, CliError> {
        let rows = Self::field(&self.vectors, "vectors")?;
        let vectors = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(RationalText::to_rational)
                    .collect::<Result<Vec<_>, _>>()
                    .map(QVector::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Configuration::from_vectors(vectors)?)
    }

    pub fn epsilon(&self) -> Result<QVector, CliError> {
        let entries = Self::field(&self.epsilon, "epsilon")?;
        Ok(QVector::new(
            entries.iter().map(RationalText::to_rational).collect::<Result<_, _>>()?,
        ))
    }

    pub fn polynomial_text(&self) -> Result<&str, CliError> {
        Ok(Self::field(&self.polynomial, "polynomial")?)
    }

    pub fn generator_texts(&self) -> Result<&[String], CliError> {
        Ok(Self::field(&self.generators, "generators")?)
    }

    pub fn groth_texts(&self) -> Result<(&str, &[String]), CliError> {
        Ok((Self::field(&self.numerator, "numerator")?, Self::field(&self.denominators, "denominators")?))
    }

    /// Ring size for free-standing polynomial lists: the `variables` field,
    /// else the largest index used (at least 1).
    pub fn ring_size<'a>(&self, texts: impl IntoIterator<Item = &'a str>) -> Result<usize, CliError> {
        if let Some(n) = self.variables {
            return Ok(n);
        }
        let mut n = 1;
        for t in texts {
            n = n.max(Polynomial::max_variable(t)?);
        }
        Ok(n)
    }
}

pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial, CliError> {
    Ok(Polynomial::parse(text, nvars)?)
}
