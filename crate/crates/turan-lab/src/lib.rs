//! Exact combinatorics for local Turán-type problems.
//!
//! The crate works with small `r`-uniform hypergraphs and provides:
//!
//! * the universal hypergraph type with exact clique / independence /
//!   embedding subroutines ([`hypergraph`]),
//! * the property (q,p) decision procedure, its complement-duality
//!   self-check and (w,v)-hole search ([`property`]),
//! * the partitioned clique-union families, named small hypergraphs and
//!   blow-ups ([`constructions`]),
//! * exact rational density formulas and part-size optimization
//!   ([`density`]),
//! * an exact solver for the minimum edge count of a hypergraph with
//!   property (q,p) plus a DIMACS CNF export route ([`exact`]),
//! * the iterative hole-removal reduction pipeline ([`reduce`]),
//! * the multigraph edge-bound machinery and its graph-case oracle
//!   ([`multigraph`]),
//! * JSON/CSV file formats ([`io`]) and a claim-verification harness
//!   ([`verify`]).
//!
//! Everything is computed in exact integer / rational arithmetic; floats
//! never enter a verdict.

pub mod comb;
pub mod constructions;
pub mod density;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod io;
pub mod multigraph;
pub mod oracle;
pub mod property;
pub mod reduce;
pub mod verify;

pub use error::{Error, Result};
pub use hypergraph::{Embedding, UniformHypergraph, VertexSet};

/// Exact rational arithmetic used for densities, thresholds and slack.
pub type Rat = num::rational::Ratio<i64>;

/// Parse a rational from `"a/b"` or a plain integer `"a"`.
pub fn parse_ratio(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<i64> {
        t.trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d == 0 {
                return Err(Error::Parse(format!("bad rational {s:?}: zero denominator")));
            }
            Ok(Rat::new(parse_int(num)?, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Serde adapter storing a [`Rat`] as the string `"a/b"`.
pub mod ratio_serde {
    use super::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        crate::parse_ratio(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Option<Rat>`.
pub mod ratio_serde_opt {
    use super::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&r.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rat>, D::Error> {
        let s: Option<String> = Option::deserialize(d)?;
        match s {
            Some(s) => Ok(Some(crate::parse_ratio(&s).map_err(serde::de::Error::custom)?)),
            None => Ok(None),
        }
    }
}
