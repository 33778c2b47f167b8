//! Material database file format and loading.
//!
//! The on-disk format is a single JSON document with top-level `metals` and
//! `alloys` arrays:
//!
//! ```json
//! {
//!   "notes": ["optional free-text provenance lines"],
//!   "metals": [
//!     { "name": "Cu", "theta_K": 343.0, "rho_room_uOhm_cm": 1.7,
//!       "rrr_default": 100.0,
//!       "rho_ph_table": [[20.0, 0.0008], [300.0, 1.683]],
//!       "source": "optional provenance" }
//!   ],
//!   "alloys": [
//!     { "solvent": "Ag", "solute": "Au",
//!       "slope_uOhm_cm_per_atpct": 0.368333, "source": "..." }
//!   ]
//! }
//! ```
//!
//! `rho_ph_table`, `source` and `notes` are optional; unknown fields are
//! rejected. A curated default database ships inside the binary and can be
//! replaced via the `CHIPNOISE_DB` environment variable or the `--db` flag.

use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use chipnoise_core::materials::{AlloyFamily, MaterialDb, MaterialRecord, PhononTable};

/// Environment variable overriding the bundled database path.
pub const DB_ENV_VAR: &str = "CHIPNOISE_DB";

const BUNDLED_DB: &str = include_str!("../data/materials.json");

#[derive(Debug, Error)]
pub enum DbError {
    #[error("database parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid database entry `{name}`: {source}")]
    Invalid {
        name: String,
        source: chipnoise_core::Error,
    },
    #[error("cannot read database: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DbFile {
    #[serde(default)]
    #[allow(dead_code)]
    notes: Vec<String>,
    metals: Vec<MetalEntry>,
    #[serde(default)]
    alloys: Vec<AlloyEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MetalEntry {
    name: String,
    #[serde(rename = "theta_K")]
    theta_k: f64,
    #[serde(rename = "rho_room_uOhm_cm")]
    rho_room_uohm_cm: f64,
    rrr_default: f64,
    rho_ph_table: Option<Vec<(f64, f64)>>,
    #[serde(default)]
    #[allow(dead_code)]
    source: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlloyEntry {
    solvent: String,
    solute: String,
    #[serde(rename = "slope_uOhm_cm_per_atpct")]
    slope_uohm_cm_per_atpct: f64,
    #[serde(default)]
    #[allow(dead_code)]
    source: Option<String>,
}

/// Parse a database document from any byte stream.
pub fn load_material_db<R: Read>(mut source: R) -> Result<MaterialDb, DbError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_material_db(&text)
}

pub fn parse_material_db(text: &str) -> Result<MaterialDb, DbError> {
    let file: DbFile = serde_json::from_str(text)?;
    let mut db = MaterialDb::new();
    for entry in file.metals {
        let mut record = MaterialRecord::new(
            &entry.name,
            entry.theta_k,
            entry.rho_room_uohm_cm,
            entry.rrr_default,
        )
        .map_err(|source| DbError::Invalid {
            name: entry.name.clone(),
            source,
        })?;
        if let Some(points) = entry.rho_ph_table {
            let table = PhononTable::new(points).map_err(|source| DbError::Invalid {
                name: entry.name.clone(),
                source,
            })?;
            record = record.with_phonon_table(table);
        }
        db.insert_metal(record).map_err(|source| DbError::Invalid {
            name: entry.name.clone(),
            source,
        })?;
    }
    for entry in file.alloys {
        let name = format!("{}-{}", entry.solvent, entry.solute);
        db.insert_alloy(AlloyFamily {
            solvent: entry.solvent,
            solute: entry.solute,
            slope_uohm_cm_per_at_pct: entry.slope_uohm_cm_per_atpct,
        })
        .map_err(|source| DbError::Invalid { name, source })?;
    }
    Ok(db)
}

/// The curated database compiled into the binary.
pub fn bundled_db() -> MaterialDb {
    parse_material_db(BUNDLED_DB).expect("bundled database must parse")
}

/// Resolve the database: explicit path, else `CHIPNOISE_DB`, else bundled.
pub fn resolve_db(explicit: Option<&Path>) -> Result<MaterialDb, DbError> {
    let env_path = std::env::var_os(DB_ENV_VAR).map(PathBuf::from);
    let path = explicit.map(Path::to_path_buf).or(env_path);
    match path {
        Some(p) => load_material_db(File::open(p)?),
        None => Ok(bundled_db()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chipnoise_core::materials::Conductor;

    #[test]
    fn bundled_database_has_the_screening_set() {
        let db = bundled_db();
        assert_eq!(db.len_metals(), 14);
        for name in [
            "Al", "W", "Au", "Ir", "Cu", "Mo", "Nb", "Pt", "Rh", "Ag", "Ta", "Ti", "Zn", "Zr",
        ] {
            assert!(db.metal(name).is_ok(), "missing {name}");
        }
        assert_eq!(db.alloy_families().len(), 3);
        for (solvent, solute) in [("Ag", "Au"), ("Cu", "Au"), ("Cu", "Ge")] {
            assert!(db.alloy_family(solvent, solute).is_ok());
        }
    }

    #[test]
    fn empty_database_is_valid() {
        let db = parse_material_db(r#"{"metals": [], "alloys": []}"#).unwrap();
        assert!(db.is_empty());
    }

    #[test]
    fn loads_from_any_byte_stream() {
        let doc = br#"{"metals": [{"name": "Cu", "theta_K": 343.0,
            "rho_room_uOhm_cm": 1.7, "rrr_default": 100.0}]}"#;
        let db = load_material_db(std::io::Cursor::new(&doc[..])).unwrap();
        assert_eq!(db.len_metals(), 1);
    }

    #[test]
    fn missing_field_is_named() {
        let err = parse_material_db(
            r#"{"metals": [{"name": "Cu", "rho_room_uOhm_cm": 1.7, "rrr_default": 100.0}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("theta_K"), "got: {err}");
    }

    #[test]
    fn unknown_field_is_rejected() {
        let err = parse_material_db(
            r#"{"metals": [{"name": "Cu", "theta_K": 343, "rho_room_uOhm_cm": 1.7,
                "rrr_default": 100.0, "color": "orange"}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("color"), "got: {err}");
    }

    #[test]
    fn duplicate_name_is_rejected() {
        let doc = r#"{"metals": [
            {"name": "Cu", "theta_K": 343, "rho_room_uOhm_cm": 1.7, "rrr_default": 100.0},
            {"name": "Cu", "theta_K": 300, "rho_room_uOhm_cm": 2.0, "rrr_default": 50.0}
        ]}"#;
        let err = parse_material_db(doc).unwrap_err();
        assert!(matches!(err, DbError::Invalid { .. }), "got: {err}");
    }

    #[test]
    fn phonon_table_round_trips_through_the_format() {
        let doc = r#"{"metals": [
            {"name": "Xx", "theta_K": 343, "rho_room_uOhm_cm": 2.0, "rrr_default": 100.0,
             "rho_ph_table": [[100.0, 1.0], [300.0, 3.0]]}
        ]}"#;
        let db = parse_material_db(doc).unwrap();
        let rho_ph = db.metal("Xx").unwrap().phonon_resistivity(200.0).unwrap();
        assert!((rho_ph - 2.0).abs() < 1e-12);
    }

    #[test]
    fn alloy_calibration_reaches_gold_standard() {
        let db = bundled_db();
        for (solvent, solute, x_star) in [("Ag", "Au", 6.0), ("Cu", "Au", 4.5), ("Cu", "Ge", 0.52)]
        {
            let alloy = db.make_alloy(solvent, solute, x_star).unwrap();
            let rho = alloy.resistivity(4.2).unwrap();
            assert!(
                (rho - 2.21).abs() < 1e-4,
                "{solvent}+{x_star}%{solute}: {rho}"
            );
        }
    }
}
