use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Extension-based semantics shared by ABA frameworks, BAFs and pBAFs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    /// conflict-free
    Cf,
    /// admissible
    Ad,
    /// complete
    Co,
    /// grounded
    Gr,
    /// preferred
    Pr,
    /// stable
    Stb,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::Cf,
        Semantics::Ad,
        Semantics::Co,
        Semantics::Gr,
        Semantics::Pr,
        Semantics::Stb,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Cf => "cf",
            Semantics::Ad => "ad",
            Semantics::Co => "co",
            Semantics::Gr => "gr",
            Semantics::Pr => "pr",
            Semantics::Stb => "stb",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidQuery(format!("unknown semantics {s:?}")))
    }
}

/// The three standard reasoning tasks.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    /// Is the query in some extension?
    Cred,
    /// Is the query in every extension? Vacuously true without extensions.
    Skept,
    /// Is the query set an extension?
    Ver,
}

impl Task {
    pub fn as_str(self) -> &'static str {
        match self {
            Task::Cred => "cred",
            Task::Skept => "skept",
            Task::Ver => "ver",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Task::Cred, Task::Skept, Task::Ver]
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidQuery(format!("unknown task {s:?}")))
    }
}

/// Which quantification a defense check uses.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum DefenseMode {
    /// Quantify over every closed set that attacks the defended element.
    ClosedSets,
    /// Counter-attack the closure of each individual attacker.
    #[default]
    AttackerClosure,
}

/// Default bound on the number of assumptions or arguments an
/// enumeration accepts.
pub const DEFAULT_MAX_ENUMERATION: usize = 24;

/// Decides a task over an already enumerated extension family.
pub(crate) fn decide_over<T: Eq>(
    family: &[T],
    task: Task,
    member: impl Fn(&T) -> bool,
    query_set: Option<&T>,
) -> bool {
    match task {
        Task::Cred => family.iter().any(member),
        Task::Skept => family.iter().all(member),
        Task::Ver => query_set.is_some_and(|q| family.contains(q)),
    }
}
