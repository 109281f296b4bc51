//! Integer parameter sequences `f_t` and `g_t`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("t={t} is outside the table (defined for 1..={len})")]
    OutOfRange { t: u32, len: usize },
    #[error("sequence evaluates to {value} at t={t}; values must be >= 1")]
    NonPositive { t: u32, value: i128 },
    #[error("cannot parse sequence `{0}`")]
    Parse(String),
}

/// Declarative description of a positive integer sequence.
///
/// `Table` holds `v_1..v_T`; it has no value at `t = 0` and is never
/// extended past its last entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SequenceSpec {
    Constant(u64),
    Affine { slope: i64, intercept: i64 },
    Table(Vec<u64>),
}

impl SequenceSpec {
    /// The identity map `t -> t`.
    pub fn identity() -> Self {
        SequenceSpec::Affine { slope: 1, intercept: 0 }
    }

    pub fn eval(&self, t: u32) -> Result<u64, SequenceError> {
        let raw: i128 = match self {
            SequenceSpec::Constant(c) => i128::from(*c),
            SequenceSpec::Affine { slope, intercept } => {
                i128::from(*slope) * i128::from(t) + i128::from(*intercept)
            }
            SequenceSpec::Table(values) => {
                if t == 0 || t as usize > values.len() {
                    return Err(SequenceError::OutOfRange { t, len: values.len() });
                }
                i128::from(values[t as usize - 1])
            }
        };
        if raw < 1 {
            return Err(SequenceError::NonPositive { t, value: raw });
        }
        u64::try_from(raw).map_err(|_| SequenceError::NonPositive { t, value: raw })
    }

    /// Values at `1..=horizon`.
    pub fn values(&self, horizon: u32) -> Result<Vec<u64>, SequenceError> {
        (1..=horizon).map(|t| self.eval(t)).collect()
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SequenceSpec::Constant(_) => "constant",
            SequenceSpec::Affine { .. } => "affine",
            SequenceSpec::Table(_) => "table",
        }
    }

    /// Space-separated parameters, as written in model files.
    pub fn params_string(&self) -> String {
        match self {
            SequenceSpec::Constant(c) => c.to_string(),
            SequenceSpec::Affine { slope, intercept } => format!("{slope} {intercept}"),
            SequenceSpec::Table(values) => values
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    /// Builds a spec from a kind name and its whitespace- or comma-separated
    /// parameters.
    pub fn from_kind_and_params(kind: &str, params: &str) -> Result<Self, SequenceError> {
        let err = || SequenceError::Parse(format!("{kind}:{params}"));
        let tokens: Vec<&str> = params
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        match kind.trim() {
            "constant" | "const" => match tokens.as_slice() {
                [c] => Ok(SequenceSpec::Constant(c.parse().map_err(|_| err())?)),
                _ => Err(err()),
            },
            "affine" => match tokens.as_slice() {
                [a, b] => Ok(SequenceSpec::Affine {
                    slope: a.parse().map_err(|_| err())?,
                    intercept: b.parse().map_err(|_| err())?,
                }),
                _ => Err(err()),
            },
            "table" => {
                if tokens.is_empty() {
                    return Err(err());
                }
                let values = tokens
                    .iter()
                    .map(|s| s.parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| err())?;
                Ok(SequenceSpec::Table(values))
            }
            _ => Err(err()),
        }
    }
}

/// Compact form used on the command line: `const:2`, `affine:1,0`, `table:2,3,5`.
impl FromStr for SequenceSpec {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| SequenceError::Parse(s.to_string()))?;
        Self::from_kind_and_params(kind, params)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Constant(c) => write!(f, "const:{c}"),
            SequenceSpec::Affine { slope, intercept } => write!(f, "affine:{slope},{intercept}"),
            SequenceSpec::Table(values) => {
                let joined: Vec<String> = values.iter().map(u64::to_string).collect();
                write!(f, "table:{}", joined.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constant_sequence() {
        assert_eq!(SequenceSpec::Constant(1).eval(7), Ok(1));
    }

    #[test]
    fn identity_sequence() {
        assert_eq!(SequenceSpec::identity().eval(4), Ok(4));
    }

    #[test]
    fn table_past_end_is_an_error() {
        let table = SequenceSpec::Table(vec![2, 3, 5]);
        assert_eq!(table.eval(3), Ok(5));
        assert_eq!(table.eval(4), Err(SequenceError::OutOfRange { t: 4, len: 3 }));
        assert!(table.eval(0).is_err());
    }

    #[test]
    fn non_positive_values_rejected() {
        assert_eq!(
            SequenceSpec::identity().eval(0),
            Err(SequenceError::NonPositive { t: 0, value: 0 })
        );
        assert!(SequenceSpec::Constant(0).eval(1).is_err());
        let falling = SequenceSpec::Affine { slope: -1, intercept: 2 };
        assert_eq!(falling.eval(1), Ok(1));
        assert!(falling.eval(2).is_err());
    }

    #[test]
    fn parse_compact_forms() {
        assert_eq!("const:3".parse(), Ok(SequenceSpec::Constant(3)));
        assert_eq!("affine:1,0".parse(), Ok(SequenceSpec::identity()));
        assert_eq!("table:2,3,5".parse(), Ok(SequenceSpec::Table(vec![2, 3, 5])));
        assert!("table:".parse::<SequenceSpec>().is_err());
        assert!("cubic:1".parse::<SequenceSpec>().is_err());
        assert!("affine:1".parse::<SequenceSpec>().is_err());
    }

    fn any_spec() -> impl Strategy<Value = SequenceSpec> {
        prop_oneof![
            (1u64..100).prop_map(SequenceSpec::Constant),
            (-5i64..5, -5i64..20)
                .prop_map(|(slope, intercept)| SequenceSpec::Affine { slope, intercept }),
            prop::collection::vec(1u64..50, 1..8).prop_map(SequenceSpec::Table),
        ]
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(spec in any_spec()) {
            let text = spec.to_string();
            prop_assert_eq!(text.parse::<SequenceSpec>(), Ok(spec.clone()));
            let rebuilt = SequenceSpec::from_kind_and_params(spec.kind_name(), &spec.params_string());
            prop_assert_eq!(rebuilt, Ok(spec));
        }

        #[test]
        fn evaluation_is_positive_or_error(spec in any_spec(), t in 0u32..20) {
            if let Ok(v) = spec.eval(t) {
                prop_assert!(v >= 1);
            }
            prop_assert_eq!(spec.eval(t), spec.eval(t));
        }
    }
}
