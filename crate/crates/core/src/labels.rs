use std::collections::BTreeMap;

/// Optional human-readable names for dense identifiers.
///
/// Identifiers without a name are displayed numerically, shifted by the
/// `offset` the owning text format uses (1 for ABA atoms, 0 for arguments).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    names: BTreeMap<usize, String>,
    offset: usize,
}

impl Labels {
    pub fn new(offset: usize) -> Self {
        Self {
            names: BTreeMap::new(),
            offset,
        }
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Names `index`, returning `false` if the name is already taken by
    /// another identifier.
    pub fn set(&mut self, index: usize, name: impl Into<String>) -> bool {
        let name = name.into();
        if self.names.iter().any(|(&i, n)| *n == name && i != index) {
            return false;
        }
        self.names.insert(index, name);
        true
    }

    pub fn get(&self, index: usize) -> Option<&str> {
        self.names.get(&index).map(String::as_str)
    }

    pub fn display(&self, index: usize) -> String {
        match self.get(index) {
            Some(name) => name.to_string(),
            None => (index + self.offset).to_string(),
        }
    }

    /// Resolves a name, or a numeric id in the external numbering.
    pub fn lookup(&self, token: &str) -> Option<usize> {
        if let Some((&i, _)) = self.names.iter().find(|(_, n)| n.as_str() == token) {
            return Some(i);
        }
        token
            .parse::<usize>()
            .ok()
            .and_then(|n| n.checked_sub(self.offset))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &str)> {
        self.names.iter().map(|(&i, n)| (i, n.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}
