//! The separation, domination and code taxonomy.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeparationKind {
    /// Locating: open traces distinct over vertices outside the set.
    L,
    /// Open-separating: open traces distinct over all vertices.
    O,
    /// Closed-separating: closed traces distinct over all vertices.
    I,
    /// Full-separating: both open- and closed-separating.
    F,
}

impl SeparationKind {
    pub const ALL: [SeparationKind; 4] = [Self::L, Self::O, Self::I, Self::F];

    /// The partial order `L <= O, I <= F` under which every S-set of the
    /// larger kind is an S-set of the smaller one.
    pub fn implies(self, weaker: SeparationKind) -> bool {
        use SeparationKind::*;
        self == weaker || weaker == L || self == F
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::L => "L",
            Self::O => "O",
            Self::I => "I",
            Self::F => "F",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DominationKind {
    D,
    TD,
}

impl DominationKind {
    pub const ALL: [DominationKind; 2] = [Self::D, Self::TD];

    pub fn name(self) -> &'static str {
        match self {
            Self::D => "D",
            Self::TD => "TD",
        }
    }
}

/// Pure domination kinds plus the eight separation/domination codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CodeKind {
    D,
    TD,
    LD,
    LTD,
    OD,
    OTD,
    ID,
    ITD,
    FD,
    FTD,
}

impl CodeKind {
    pub const ALL: [CodeKind; 10] = [
        Self::D,
        Self::TD,
        Self::LD,
        Self::LTD,
        Self::OD,
        Self::OTD,
        Self::ID,
        Self::ITD,
        Self::FD,
        Self::FTD,
    ];

    /// The eight codes that combine separation with domination.
    pub const CODES: [CodeKind; 8] = [
        Self::LD,
        Self::LTD,
        Self::OD,
        Self::OTD,
        Self::ID,
        Self::ITD,
        Self::FD,
        Self::FTD,
    ];

    pub fn new(sep: Option<SeparationKind>, dom: DominationKind) -> Self {
        use DominationKind as Dk;
        use SeparationKind as Sk;
        match (sep, dom) {
            (None, Dk::D) => Self::D,
            (None, Dk::TD) => Self::TD,
            (Some(Sk::L), Dk::D) => Self::LD,
            (Some(Sk::L), Dk::TD) => Self::LTD,
            (Some(Sk::O), Dk::D) => Self::OD,
            (Some(Sk::O), Dk::TD) => Self::OTD,
            (Some(Sk::I), Dk::D) => Self::ID,
            (Some(Sk::I), Dk::TD) => Self::ITD,
            (Some(Sk::F), Dk::D) => Self::FD,
            (Some(Sk::F), Dk::TD) => Self::FTD,
        }
    }

    pub fn separation(self) -> Option<SeparationKind> {
        use SeparationKind as Sk;
        match self {
            Self::D | Self::TD => None,
            Self::LD | Self::LTD => Some(Sk::L),
            Self::OD | Self::OTD => Some(Sk::O),
            Self::ID | Self::ITD => Some(Sk::I),
            Self::FD | Self::FTD => Some(Sk::F),
        }
    }

    pub fn domination(self) -> DominationKind {
        match self {
            Self::D | Self::LD | Self::OD | Self::ID | Self::FD => DominationKind::D,
            _ => DominationKind::TD,
        }
    }

    /// True when every code of kind `self` is a code of kind `weaker`.
    pub fn implies(self, weaker: CodeKind) -> bool {
        let sep_ok = match (self.separation(), weaker.separation()) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a.implies(b),
        };
        let dom_ok =
            self.domination() == weaker.domination() || weaker.domination() == DominationKind::D;
        sep_ok && dom_ok
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::D => "D",
            Self::TD => "TD",
            Self::LD => "LD",
            Self::LTD => "LTD",
            Self::OD => "OD",
            Self::OTD => "OTD",
            Self::ID => "ID",
            Self::ITD => "ITD",
            Self::FD => "FD",
            Self::FTD => "FTD",
        }
    }
}

/// Anything a number can be computed for: a bare separation kind or a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Separation(SeparationKind),
    Code(CodeKind),
}

impl Kind {
    pub fn all() -> impl Iterator<Item = Kind> {
        SeparationKind::ALL
            .into_iter()
            .map(Kind::Separation)
            .chain(CodeKind::ALL.into_iter().map(Kind::Code))
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Separation(s) => s.name(),
            Kind::Code(c) => c.name(),
        }
    }
}

impl From<SeparationKind> for Kind {
    fn from(s: SeparationKind) -> Self {
        Kind::Separation(s)
    }
}

impl From<CodeKind> for Kind {
    fn from(c: CodeKind) -> Self {
        Kind::Code(c)
    }
}

macro_rules! display_and_serialize {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(self.name())
            }
        }
    )*};
}

display_and_serialize!(SeparationKind, DominationKind, CodeKind, Kind);

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Kind::all()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown kind '{s}'")))
    }
}

impl FromStr for SeparationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SeparationKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown separation kind '{s}'")))
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CodeKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown code kind '{s}'")))
    }
}
