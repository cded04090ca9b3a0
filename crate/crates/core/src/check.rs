use serde::Serialize;

use crate::error::{Error, Result};

/// One verified identity or value.
///
/// `anchor` is the formula or statement the check validates; `expected` is
/// present when a reference value exists, and `pass` is exact equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        expected: Option<String>,
        computed: impl Into<String>,
        pass: bool,
    ) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            expected,
            computed: computed.into(),
            pass,
        }
    }

    /// A check comparing two displayable values for equality of their text.
    pub fn equal(
        name: impl Into<String>,
        anchor: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
    ) -> Self {
        let e = expected.to_string();
        let c = computed.to_string();
        let pass = e == c;
        Check::new(name, anchor, Some(e), c, pass)
    }
}

/// Fails with the names of every failing check.
pub fn ensure_all_pass(checks: &[Check]) -> Result<()> {
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::Verification(failed.join(", ")))
    }
}
