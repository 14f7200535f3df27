use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

macro_rules! catalog {
    ($($variant:ident => $code:literal, $hyp:literal, $concl:literal;)*) => {
        /// Identifier of one statement in the verification catalog.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId { $($variant),* }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn code(self) -> &'static str {
                match self { $(TheoremId::$variant => $code),* }
            }

            /// Condition on the instance under which the conclusion is asserted.
            pub fn hypothesis(self) -> &'static str {
                match self { $(TheoremId::$variant => $hyp),* }
            }

            pub fn conclusion(self) -> &'static str {
                match self { $(TheoremId::$variant => $concl),* }
            }
        }
    };
}

catalog! {
    T3_4 => "T3.4", "none", "a non-empty subset is a subsemigroup (left, right, two-sided ideal) iff its characteristic function is fuzzy of the same kind";
    T3_5 => "T3.5", "none", "a non-empty subset is a bi-ideal iff its characteristic function is a fuzzy bi-ideal";
    T3_6 => "T3.6", "none", "a fuzzy subset is a fuzzy subsemigroup iff every level set at an attained grade is a subsemigroup";
    T3_7 => "T3.7", "none", "a fuzzy subset is a fuzzy bi-ideal iff every level set at an attained grade is a bi-ideal";
    P3_8 => "P3.8", "none", "a non-empty meet of two fuzzy subsemigroups (bi-ideals) is again one";
    P3_9 => "P3.9", "none", "pullbacks along endomorphisms and pushforwards along surjective ones preserve fuzzy subsemigroups and bi-ideals";
    P3_10 => "P3.10", "none", "composing with an endomorphism preserves fuzzy subsemigroups and bi-ideals";
    P3_11 => "P3.11", "none", "integer powers of fuzzy subsemigroups (bi-ideals) are again such";
    T3_12 => "T3.12", "none", "fuzzy subsemigroup iff mu o mu <= mu";
    T3_13 => "T3.13", "none", "fuzzy bi-ideal iff mu o mu <= mu and mu o chi o mu <= mu";
    T4_7 => "T4.7", "regular and left duo (right duo, duo)", "fuzzy right (left, two-sided) ideal iff fuzzy bi-ideal";
    T4_8 => "T4.8", "regular and left duo (right duo, duo)", "fuzzy bi-ideal iff fuzzy (1,2)-ideal";
    T4_9 => "T4.9", "regular", "left duo (right duo, duo) iff every fuzzy left (right, each one-sided) ideal is two-sided";
    T4_10 => "T4.10", "regular", "every bi-ideal is a right (left, two-sided) ideal iff every fuzzy bi-ideal is fuzzy of that kind";
    P4_13 => "P4.13", "left zero (right zero)", "every fuzzy left (right) ideal is constant";
    T4_14 => "T4.14", "regular", "idempotents form a left (right) zero subsemigroup iff every fuzzy left (right) ideal is constant on idempotents";
    C4_15 => "C4.15", "every element idempotent", "left (right) zero iff every fuzzy left (right) ideal is constant";
    T4_17 => "T4.17", "none", "intra-regular iff every fuzzy ideal has mu(a) = mu(a b a) for some b, at every a";
    T4_18 => "T4.18", "none", "left (right) regular iff every fuzzy left (right) ideal has mu(a) = mu(a b a) for some b, at every a";
    P4_19 => "P4.19", "regular and intra-regular", "for fuzzy bi-ideals mu1 o mu2 >= mu1 meet mu2, and the meet of both composites also dominates it";
    T4_24 => "T4.24", "none", "left simple (right simple, simple) iff every fuzzy left (right, two-sided) ideal is constant";
    T4_25 => "T4.25", "left simple (right simple)", "every fuzzy bi-ideal is a fuzzy right (left) ideal";
    P5_2 => "P5.2", "none", "fuzzy one-sided ideals are fuzzy quasi ideals, and fuzzy quasi ideals are fuzzy bi-ideals";
    P5_3 => "P5.3", "none", "fuzzy quasi ideals are exactly the non-empty meets of a fuzzy right and a fuzzy left ideal";
    C5_4 => "C5.4", "regular", "mu o sigma is a fuzzy quasi ideal for fuzzy right mu and fuzzy left sigma";
    P5_5 => "P5.5", "regular", "mu o sigma is a fuzzy bi-ideal for fuzzy right mu and fuzzy left sigma";
    T5_6 => "T5.6", "none", "a non-empty subset is a quasi ideal iff its characteristic function is a fuzzy quasi ideal";
    T5_7 => "T5.7", "none", "a fuzzy subset is a fuzzy quasi ideal iff every level set at an attained grade is a quasi ideal";
    P5_8 => "P5.8", "none", "pullbacks of fuzzy left (right) ideals along endomorphisms absorb chi from the left (right) and stay one-sided ideals";
    P5_9 => "P5.9", "none", "pullbacks of fuzzy quasi ideals along endomorphisms are fuzzy quasi ideals";
    P5_10 => "P5.10", "none", "pushforwards of fuzzy left (right) ideals along surjective endomorphisms absorb the pushed chi";
    P5_11 => "P5.11", "none", "pushforwards of fuzzy quasi ideals along surjective endomorphisms are fuzzy quasi ideals";
    L5_12 => "L5.12", "none", "characteristic functions reflect inclusion, meets and subset products";
    T5_13 => "T5.13", "none", "regular iff mu o lambda = mu meet lambda iff right/left ideals are idempotent with quasi composites iff delta = delta o chi o delta";
    T5_14 => "T5.14", "none", "regular and intra-regular iff every quasi ideal Q has Q Gamma Q = Q";
    T5_15 => "T5.15", "none", "every quasi ideal is idempotent iff every fuzzy quasi ideal is idempotent";
    T5_16 => "T5.16", "none", "regular and intra-regular iff every fuzzy quasi ideal is idempotent iff every fuzzy bi-ideal is idempotent";
    T5_17 => "T5.17", "none", "fuzzy quasi ideal iff mu(x) >= min(mu(b), mu(c)) whenever x = b a s = t b c";
    T5_18 => "T5.18", "none", "fuzzy quasi ideal iff mu(x) >= max(min(mu(b), mu(c)), min(mu(t), mu(s))) whenever x = b a s = t b c";
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem `{0}`")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.code().eq_ignore_ascii_case(t) || id.code().replace('.', "_").eq_ignore_ascii_case(t))
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Parses a comma-separated list; `all` selects the whole catalog.
pub fn parse_list(s: &str) -> Result<Vec<TheoremId>, UnknownTheorem> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids = s.split(',').filter(|p| !p.trim().is_empty()).map(str::parse).collect::<Result<Vec<_>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_codes() {
        assert_eq!(TheoremId::ALL.len(), 39);
        for id in TheoremId::ALL {
            assert_eq!(id.code().parse::<TheoremId>().unwrap(), *id);
        }
        assert_eq!("t5_17".parse::<TheoremId>().unwrap(), TheoremId::T5_17);
        assert!("T9.9".parse::<TheoremId>().is_err());
        assert_eq!(parse_list("T5.18, T3.4,T5.18").unwrap(), vec![TheoremId::T3_4, TheoremId::T5_18]);
        assert_eq!(parse_list("all").unwrap().len(), 39);
    }
}
