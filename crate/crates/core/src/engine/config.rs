use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Edge sort key: a prefix of `[deg1, deg2, label1, label2]`, where the
/// degree pair and the label pair are each in descending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EdgeSortMode {
    None,
    OneDeg,
    TwoDegs,
    #[default]
    DegsAndLabels,
}

impl EdgeSortMode {
    pub const ALL: [EdgeSortMode; 4] = [
        EdgeSortMode::DegsAndLabels,
        EdgeSortMode::TwoDegs,
        EdgeSortMode::OneDeg,
        EdgeSortMode::None,
    ];

    pub fn key_len(self) -> usize {
        match self {
            EdgeSortMode::None => 0,
            EdgeSortMode::OneDeg => 1,
            EdgeSortMode::TwoDegs => 2,
            EdgeSortMode::DegsAndLabels => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeSortMode::None => "none",
            EdgeSortMode::OneDeg => "one-deg",
            EdgeSortMode::TwoDegs => "two-degs",
            EdgeSortMode::DegsAndLabels => "degs-and-labels",
        }
    }
}

/// How the two endpoints of an edge are ordered. The first endpoint's
/// component is the one whose h-values get shifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EndpointMode {
    #[default]
    Random,
    /// Ascending by current component level, random among equals.
    ByLevel,
    /// The endpoint whose `(y, h, m1, m2)` tuple is canonically smaller
    /// comes first, so the shifted side can be read off the merge term.
    Canonical,
}

impl EndpointMode {
    pub fn name(self) -> &'static str {
        match self {
            EndpointMode::Random => "random",
            EndpointMode::ByLevel => "by-level",
            EndpointMode::Canonical => "canonical",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// Full parsing with h-values and the same-component indicator.
    #[default]
    Npa,
    /// Baseline: merges see only the two component encodings.
    Npba,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Npa => "npa",
            Variant::Npba => "npba",
        }
    }
}

/// Everything that determines a run besides the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SortConfig {
    pub edge_mode: EdgeSortMode,
    pub endpoint_mode: EndpointMode,
    pub variant: Variant,
    pub seed: u64,
}

impl SortConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }
}

impl fmt::Display for EdgeSortMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for EndpointMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for SortConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "--mode {} --sv {} --variant {} --seed {}",
            self.edge_mode.name(),
            self.endpoint_mode.name(),
            self.variant.name(),
            self.seed
        )
    }
}

impl FromStr for EdgeSortMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        EdgeSortMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "edge sort mode",
                value: s.into(),
            })
    }
}

impl FromStr for EndpointMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "random" => Ok(EndpointMode::Random),
            "by-level" => Ok(EndpointMode::ByLevel),
            "canonical" => Ok(EndpointMode::Canonical),
            _ => Err(Error::Unknown {
                kind: "endpoint mode",
                value: s.into(),
            }),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "npa" => Ok(Variant::Npa),
            "npba" => Ok(Variant::Npba),
            _ => Err(Error::Unknown {
                kind: "variant",
                value: s.into(),
            }),
        }
    }
}
