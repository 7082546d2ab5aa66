//! Tiling spec files (TOML, or JSON when the file name ends in `.json`).
//!
//! ```toml
//! name = "truncated square"
//! classes = [{ config = "4.8.8", weight = 1 }]
//! faces = { 4 = 6, 8 = 3 }   # optional
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use hypvol_core::tiling::{weight_to_ratio, TilingSpec, VertexConfig};
use hypvol_core::Error;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    name: String,
    classes: Vec<ClassEntry>,
    #[serde(default)]
    faces: Option<BTreeMap<String, u64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassEntry {
    config: String,
    #[serde(default)]
    weight: Option<f64>,
}

fn parse_error(message: String) -> Error {
    Error::Parse { position: 0, message }
}

pub fn parse_spec(text: &str, json: bool) -> Result<TilingSpec, Error> {
    let file: SpecFile = if json {
        serde_json::from_str(text).map_err(|e| parse_error(format!("spec file: {e}")))?
    } else {
        toml::from_str(text).map_err(|e| parse_error(format!("spec file: {e}")))?
    };
    if file.classes.is_empty() {
        return Err(parse_error("spec file: `classes` is empty".into()));
    }
    let single = file.classes.len() == 1;
    let mut classes = Vec::with_capacity(file.classes.len());
    for entry in file.classes {
        let config: VertexConfig = entry.config.parse()?;
        let weight = match entry.weight {
            Some(w) => weight_to_ratio(w)?,
            None if single => 1.into(),
            None => return Err(parse_error(format!("spec file: class {config} needs a weight"))),
        };
        classes.push((config, weight));
    }
    let spec = TilingSpec::new(file.name, classes)?;
    match file.faces {
        None => Ok(spec),
        Some(raw) => {
            let mut faces = BTreeMap::new();
            for (key, count) in raw {
                let size: u32 = key
                    .trim()
                    .parse()
                    .map_err(|_| parse_error(format!("spec file: face size `{key}` is not an integer")))?;
                faces.insert(size, count);
            }
            spec.with_faces(faces)
        }
    }
}

pub fn read_spec(path: &Path) -> Result<TilingSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_error(format!("cannot read {}: {e}", path.display())))?;
    let json = path.extension().is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
    parse_spec(&text, json)
}
