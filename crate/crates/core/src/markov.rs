//! Exogenisation: trading latent processes for latent states.

use thiserror::Error;

use crate::enumerate::is_causal_relevant;
use crate::fop::{minimal_representative_with, SearchError};
use crate::fpo::Fpo;
use crate::search::DEFAULT_BUDGET;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExogeniseError {
    #[error("not causal-relevant: internal element `{0}` is maximal")]
    NotCausalRelevant(String),
    #[error(transparent)]
    Search(#[from] SearchError),
}

pub fn exogenise(s: &Fpo) -> Result<Fpo, ExogeniseError> {
    exogenise_with(s, DEFAULT_BUDGET)
}

/// Removes every non-minimal internal element, keeping the relations they
/// mediated, then reduces to the minimal representative.
pub fn exogenise_with(s: &Fpo, budget: u64) -> Result<Fpo, ExogeniseError> {
    if !is_causal_relevant(s) {
        let x = s.internal().find(|&x| s.is_maximal(x)).unwrap();
        return Err(ExogeniseError::NotCausalRelevant(s.id(x).to_string()));
    }
    let drop: Vec<usize> = s.internal().filter(|&x| !s.is_minimal(x)).collect();
    Ok(minimal_representative_with(&s.without(&drop), budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_relabelling_isomorphic;
    use crate::enumerate::is_markov_relevant;
    use crate::fop::find_fop_map;
    use crate::named;

    #[test]
    fn bottleneck_becomes_full_frame() {
        let r = exogenise(&named::bottleneck(2, 2)).unwrap();
        assert!(is_relabelling_isomorphic(&r, &named::full_frame(2, 2)));
    }

    #[test]
    fn bell_is_fixed() {
        let r = exogenise(&named::bell()).unwrap();
        assert!(is_relabelling_isomorphic(&r, &named::bell()));
    }

    #[test]
    fn zigzag_collapses_to_full_frame() {
        let z = named::zz22(1);
        let r = exogenise(&z).unwrap();
        assert!(is_markov_relevant(&r));
        assert!(find_fop_map(&r, &z).unwrap().is_some());
        assert!(is_relabelling_isomorphic(&r, &named::full_frame(2, 2)));
    }

    #[test]
    fn rejects_internal_maximal() {
        let s = named::bell().with_isolated("z");
        assert_eq!(exogenise(&s), Err(ExogeniseError::NotCausalRelevant("z".into())));
    }
}
