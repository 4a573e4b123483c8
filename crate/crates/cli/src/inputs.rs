//! Resolving command-line arguments into groups, algebras and subspaces.
//! Every input is digested into the run report.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use galg_core::algebra::AlgebraFile;
use galg_core::group::GroupFile;
use galg_core::subspace::SubspaceFile;
use galg_core::{AlgebraSpec, GroupTable, NamedGroup, StructureAlgebra, Subspace, Tolerances};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// `name → sha256:<hex>` of every input read.
#[derive(Debug, Default)]
pub struct Inputs {
    pub digests: BTreeMap<String, String>,
}

impl Inputs {
    pub fn record(&mut self, name: &str, bytes: &[u8]) {
        let digest = hex::encode(Sha256::digest(bytes));
        self.digests.insert(name.to_string(), format!("sha256:{digest}"));
    }

    fn read(&mut self, name: &str, path: &Path) -> Result<Vec<u8>> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.record(name, &bytes);
        Ok(bytes)
    }

    pub fn read_json<T: serde::de::DeserializeOwned>(&mut self, name: &str, path: &Path) -> Result<T> {
        let bytes = self.read(name, path)?;
        serde_json::from_slice(&bytes).with_context(|| format!("parsing {}", path.display()))
    }
}

fn is_file(arg: &str) -> bool {
    Path::new(arg).is_file()
}

/// A group from a spec string such as `dihedral:6`, or a JSON group file.
pub fn group(inputs: &mut Inputs, name: &str, arg: &str) -> Result<(GroupTable, Value)> {
    if is_file(arg) {
        let file: GroupFile = inputs.read_json(name, Path::new(arg))?;
        let g = GroupTable::from_file(&file)?;
        let reference = serde_json::to_value(&file)?;
        Ok((g, reference))
    } else {
        inputs.record(name, arg.as_bytes());
        let spec: NamedGroup = arg.parse()?;
        Ok((GroupTable::named(spec.clone())?, Value::String(spec.to_string())))
    }
}

/// An algebra from a spec string such as `matrix:2`, or a JSON algebra file.
/// The second value is how subspace files refer to it.
pub fn algebra(inputs: &mut Inputs, name: &str, arg: &str) -> Result<(StructureAlgebra, Value)> {
    if is_file(arg) {
        let file: AlgebraFile = inputs.read_json(name, Path::new(arg))?;
        let a = StructureAlgebra::from_file(&file)?;
        Ok((a, serde_json::to_value(&file)?))
    } else {
        inputs.record(name, arg.as_bytes());
        let spec: AlgebraSpec = arg.parse()?;
        Ok((spec.build()?, Value::String(spec.to_string())))
    }
}

/// The `algebra` field of a subspace file: a spec string or an inline
/// algebra object.
pub fn referenced_algebra(reference: &Value) -> Result<(StructureAlgebra, Option<AlgebraSpec>)> {
    match reference {
        Value::String(s) => {
            let spec: AlgebraSpec = s.parse()?;
            Ok((spec.build()?, Some(spec)))
        }
        Value::Object(_) => {
            let file: AlgebraFile = serde_json::from_value(reference.clone())?;
            Ok((StructureAlgebra::from_file(&file)?, None))
        }
        _ => bail!("subspace file `algebra` must be a spec string or an algebra object"),
    }
}

pub fn subspace_file(inputs: &mut Inputs, name: &str, path: &Path) -> Result<SubspaceFile> {
    inputs.read_json(name, path)
}

pub fn subspace(alg: &StructureAlgebra, file: &SubspaceFile, tol: Tolerances) -> Result<Subspace> {
    Ok(Subspace::from_file_basis(alg, file, tol)?)
}

/// A vector of `[re, im]` pairs.
pub fn element(inputs: &mut Inputs, name: &str, path: &Path, dim: usize) -> Result<Vec<galg_core::C64>> {
    let raw: Vec<[f64; 2]> = inputs.read_json(name, path)?;
    if raw.len() != dim {
        bail!("element has {} coordinates, algebra has dimension {dim}", raw.len());
    }
    Ok(raw.into_iter().map(|[re, im]| galg_core::C64::new(re, im)).collect())
}
