use std::fmt;
use std::str::FromStr;

use crate::MarkovError;

/// Which separation notion a query or implication list is based on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SepCriterion {
    /// Plain d-separation.
    D,
    /// Sigma-separation (d-separation in the acyclification).
    Sigma,
}

/// The checkable Markov properties.
///
/// The `Witness*` kinds are stated on the augmented graph and take an
/// explicit witness distribution over its nodes; the others are stated
/// directly on the given graph and distribution.  `OLmp` and `RFp` quantify
/// over a total order and require one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyKind {
    /// Every d-separation is a conditional independence.
    DGmp,
    /// Every sigma-separation is a conditional independence.
    GdGmp,
    /// Local statements at each node over ancestral sets with parts of the
    /// node's strongly connected set marginalized away.
    DLmp,
    /// Local statements at each node over ancestral subsets of its
    /// order-predecessors.
    OLmp,
    /// Recursive factorization along an order; equivalent to `OLmp` and
    /// checked identically.
    RFp,
    /// Undirected global statements on moralizations of ancestral subgraphs.
    AuGmp,
    /// Undirected global statements on moralizations of all marginalizations.
    RuGmp,
    /// Undirected local statements on moralizations of ancestral subgraphs.
    AuLmp,
    /// Undirected local statements on moralizations of all marginalizations.
    RuLmp,
    /// Undirected pairwise statements on moralizations of ancestral
    /// subgraphs.
    AuPmp,
    /// Undirected pairwise statements on moralizations of all
    /// marginalizations.
    RuPmp,
    /// Clique factorization over every ancestral moralization, decided by an
    /// iterative-proportional-fitting oracle.
    AFpIpf,
    /// `DGmp` on the augmented graph, witnessed.
    WitnessMdGmp,
    /// `GdGmp` on the augmented graph, witnessed.
    WitnessMgdGmp,
    /// `DGmp` on the acyclic augmentation, witnessed.
    WitnessSmgdGmp,
    /// `DLmp` on the augmented graph, witnessed.
    WitnessMdLmp,
}

/// All property kinds in a fixed presentation order.
pub const ALL_KINDS: [PropertyKind; 16] = [
    PropertyKind::DGmp,
    PropertyKind::GdGmp,
    PropertyKind::DLmp,
    PropertyKind::OLmp,
    PropertyKind::RFp,
    PropertyKind::AuGmp,
    PropertyKind::RuGmp,
    PropertyKind::AuLmp,
    PropertyKind::RuLmp,
    PropertyKind::AuPmp,
    PropertyKind::RuPmp,
    PropertyKind::AFpIpf,
    PropertyKind::WitnessMdGmp,
    PropertyKind::WitnessMgdGmp,
    PropertyKind::WitnessSmgdGmp,
    PropertyKind::WitnessMdLmp,
];

impl PropertyKind {
    /// The conventional short name, as accepted by [`FromStr`].
    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::DGmp => "dGMP",
            PropertyKind::GdGmp => "gdGMP",
            PropertyKind::DLmp => "dLMP",
            PropertyKind::OLmp => "oLMP",
            PropertyKind::RFp => "rFP",
            PropertyKind::AuGmp => "auGMP",
            PropertyKind::RuGmp => "ruGMP",
            PropertyKind::AuLmp => "auLMP",
            PropertyKind::RuLmp => "ruLMP",
            PropertyKind::AuPmp => "auPMP",
            PropertyKind::RuPmp => "ruPMP",
            PropertyKind::AFpIpf => "aFP_ipf",
            PropertyKind::WitnessMdGmp => "witness_mdGMP",
            PropertyKind::WitnessMgdGmp => "witness_mgdGMP",
            PropertyKind::WitnessSmgdGmp => "witness_smgdGMP",
            PropertyKind::WitnessMdLmp => "witness_mdLMP",
        }
    }

    /// True for the kinds that quantify over a supplied total order.
    pub fn requires_order(self) -> bool {
        matches!(self, PropertyKind::OLmp | PropertyKind::RFp)
    }

    /// True for the kinds stated on the augmented graph with an explicit
    /// witness.
    pub fn requires_witness(self) -> bool {
        matches!(
            self,
            PropertyKind::WitnessMdGmp
                | PropertyKind::WitnessMgdGmp
                | PropertyKind::WitnessSmgdGmp
                | PropertyKind::WitnessMdLmp
        )
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = MarkovError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_KINDS
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| MarkovError::UnknownProperty(s.to_owned()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for kind in ALL_KINDS {
            assert_eq!(kind.name().parse::<PropertyKind>().unwrap(), kind);
        }
        assert!("dgmp".parse::<PropertyKind>().is_ok());
        assert!("no-such-property".parse::<PropertyKind>().is_err());
    }

    #[test]
    fn requirement_flags() {
        assert!(PropertyKind::OLmp.requires_order());
        assert!(PropertyKind::RFp.requires_order());
        assert!(!PropertyKind::DGmp.requires_order());
        assert!(PropertyKind::WitnessSmgdGmp.requires_witness());
        assert!(!PropertyKind::AFpIpf.requires_witness());
    }
}
