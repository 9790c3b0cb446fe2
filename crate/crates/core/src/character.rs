//! Abstract unramified unitary characters of a local field's unit group.
//!
//! Only three features of a character ever matter to the classification
//! data: whether its square is trivial, what its inverse is, and multiset
//! equality. The trivial character and the unique quadratic character
//! `lambda0` are self-inverse; everything else is an opaque label paired
//! with its formal inverse.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnramifiedCharacter {
    Trivial,
    Lambda0,
    /// A character with non-trivial square, identified by label; `inverted`
    /// distinguishes the two members of the inverse pair.
    Generic {
        label: String,
        inverted: bool,
    },
}

impl UnramifiedCharacter {
    pub fn generic(label: impl Into<String>) -> Self {
        UnramifiedCharacter::Generic {
            label: label.into(),
            inverted: false,
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            UnramifiedCharacter::Trivial => UnramifiedCharacter::Trivial,
            UnramifiedCharacter::Lambda0 => UnramifiedCharacter::Lambda0,
            UnramifiedCharacter::Generic { label, inverted } => UnramifiedCharacter::Generic {
                label: label.clone(),
                inverted: !inverted,
            },
        }
    }

    /// True iff the square of the character is trivial (chi = chi^-1).
    pub fn is_self_dual(&self) -> bool {
        !matches!(self, UnramifiedCharacter::Generic { .. })
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, UnramifiedCharacter::Trivial)
    }

    pub fn is_lambda0(&self) -> bool {
        matches!(self, UnramifiedCharacter::Lambda0)
    }
}

impl fmt::Display for UnramifiedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnramifiedCharacter::Trivial => write!(f, "1"),
            UnramifiedCharacter::Lambda0 => write!(f, "lambda0"),
            UnramifiedCharacter::Generic { label, inverted } => {
                if *inverted {
                    write!(f, "{label}^-1")
                } else {
                    write!(f, "{label}")
                }
            }
        }
    }
}

impl FromStr for UnramifiedCharacter {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "1" | "triv" | "trivial" => return Ok(UnramifiedCharacter::Trivial),
            "lambda0" | "lambda_0" => return Ok(UnramifiedCharacter::Lambda0),
            "" => return Err(Error::Parse("empty character".into())),
            _ => {}
        }
        let (label, inverted) = match text.strip_suffix("^-1") {
            Some(base) => (base, true),
            None => (text, false),
        };
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::Parse(format!("bad character label {text:?}")));
        }
        Ok(UnramifiedCharacter::Generic {
            label: label.to_string(),
            inverted,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_self_duality() {
        let chi = UnramifiedCharacter::generic("chi");
        assert_eq!(chi.inverse().inverse(), chi);
        assert_ne!(chi.inverse(), chi);
        assert!(!chi.is_self_dual());
        assert!(UnramifiedCharacter::Trivial.is_self_dual());
        assert_eq!(
            UnramifiedCharacter::Lambda0.inverse(),
            UnramifiedCharacter::Lambda0
        );
    }

    #[test]
    fn parse_round_trip() {
        for text in ["1", "lambda0", "chi", "chi^-1", "a_3"] {
            let chi: UnramifiedCharacter = text.parse().unwrap();
            assert_eq!(chi.to_string().parse::<UnramifiedCharacter>().unwrap(), chi);
        }
        assert_eq!(
            "trivial".parse::<UnramifiedCharacter>().unwrap(),
            UnramifiedCharacter::Trivial
        );
        assert!("".parse::<UnramifiedCharacter>().is_err());
        assert!("bad label".parse::<UnramifiedCharacter>().is_err());
    }
}
