//! Canonical JSON text: object keys sorted, two-space indentation, LF line
//! endings and a trailing newline. Equal values always render to equal bytes.

use serde::Serialize;

pub fn to_canonical_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    // serde_json::Value keeps object keys in a BTreeMap
    let tree = serde_json::to_value(value)?;
    let mut text = serde_json::to_string_pretty(&tree)?;
    text.push('\n');
    Ok(text)
}
