//! JSON file formats for algebras, modules, module maps and fp functors.
//!
//! Scalars are strings: decimal residues over a prime field, `"num/den"` (or an integer) over
//! the rationals. Matrices are arrays of rows. Arrow matrices are stored in the acting
//! orientation, so for a right module the matrix of `α: u -> v` maps the component at `v` to
//! the component at `u`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use stabhom_core::algebra::{Algebra, ModuleMap, Quiver, Relation, Representation, Side};
use stabhom_core::exactla::{Field, Matrix};
use stabhom_core::fpfun::{FpFunctor, Variance};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{context}: {source}")]
    Json { context: String, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] stabhom_core::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, FormatError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Prime { p: u64 },
    Rational,
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldSpec::Prime { p } => Ok(Field::prime(*p)?),
            FieldSpec::Rational => Ok(Field::Rational),
        }
    }

    pub fn from_field(field: Field) -> FieldSpec {
        match field {
            Field::Prime(p) => FieldSpec::Prime { p },
            Field::Rational => FieldSpec::Rational,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSpec {
    pub terms: Vec<TermSpec>,
}

fn default_bound() -> usize {
    10
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
    #[serde(default = "default_bound")]
    pub nilpotency_bound: usize,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &Algebra) -> AlgebraFile {
        let quiver = algebra.quiver();
        let field = algebra.field();
        AlgebraFile {
            field: FieldSpec::from_field(field),
            quiver: QuiverSpec {
                vertices: quiver.vertices().to_vec(),
                arrows: quiver
                    .arrows()
                    .iter()
                    .map(|a| ArrowSpec {
                        name: a.name.clone(),
                        from: quiver.vertices()[a.source].clone(),
                        to: quiver.vertices()[a.target].clone(),
                    })
                    .collect(),
            },
            relations: algebra
                .relations()
                .iter()
                .map(|r| RelationSpec {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| TermSpec {
                            coeff: field.format(c),
                            path: p.iter().map(|&a| quiver.arrows()[a].name.clone()).collect(),
                        })
                        .collect(),
                })
                .collect(),
            nilpotency_bound: algebra.nilpotency_bound(),
        }
    }

    pub fn build(&self) -> Result<Algebra> {
        let field = self.field.to_field()?;
        let arrows: Vec<(&str, &str, &str)> =
            self.quiver.arrows.iter().map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str())).collect();
        let vertices: Vec<&str> = self.quiver.vertices.iter().map(String::as_str).collect();
        let quiver = Quiver::new(&vertices, &arrows)?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for t in &r.terms {
                let path: Vec<&str> = t.path.iter().map(String::as_str).collect();
                terms.push((field.parse(&t.coeff)?, path));
            }
            let named: Vec<_> = terms.iter().map(|(c, p)| (c.clone(), p.as_slice())).collect();
            relations.push(Relation::from_names(&quiver, &named)?);
        }
        Ok(Algebra::build(quiver, relations, field, self.nilpotency_bound)?)
    }
}

/// Where a module's algebra comes from: a path (relative to the module file) or inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraFile),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

impl From<Side> for SideSpec {
    fn from(s: Side) -> SideSpec {
        match s {
            Side::Left => SideSpec::Left,
            Side::Right => SideSpec::Right,
        }
    }
}

impl From<SideSpec> for Side {
    fn from(s: SideSpec) -> Side {
        match s {
            SideSpec::Left => Side::Left,
            SideSpec::Right => Side::Right,
        }
    }
}

pub type MatrixSpec = Vec<Vec<String>>;

pub fn matrix_to_spec(m: &Matrix) -> MatrixSpec {
    let f = m.field();
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| f.format(&m.get(r, c))).collect()).collect()
}

pub fn matrix_from_spec(field: Field, rows: usize, cols: usize, spec: &MatrixSpec, what: &str) -> Result<Matrix> {
    if spec.len() != rows || spec.iter().any(|r| r.len() != cols) {
        return Err(FormatError::Invalid(format!("{what}: expected a {rows}x{cols} matrix")));
    }
    let entries = spec.iter().flatten().map(|s| field.parse(s)).collect::<stabhom_core::Result<Vec<_>>>()?;
    Ok(Matrix::new(field, rows, cols, entries)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub side: SideSpec,
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub arrows: BTreeMap<String, MatrixSpec>,
}

impl ModuleFile {
    /// Serializes `m` with its algebra inline.
    pub fn from_module(m: &Representation) -> ModuleFile {
        let mut file = ModuleFile::bare(m);
        file.algebra = Some(AlgebraRef::Inline(AlgebraFile::from_algebra(m.algebra())));
        file
    }

    /// Serializes `m` without its algebra.
    pub fn bare(m: &Representation) -> ModuleFile {
        let alg = m.algebra();
        ModuleFile {
            algebra: None,
            side: m.side().into(),
            dims: (0..alg.num_vertices()).map(|v| (alg.vertex_name(v).to_string(), m.dim_at(v))).collect(),
            arrows: (0..alg.num_arrows())
                .map(|a| (alg.arrow_name(a).to_string(), matrix_to_spec(m.arrow_map(a))))
                .collect(),
        }
    }

    /// Resolves the algebra reference, relative to `base_dir` for paths.
    pub fn resolve_algebra(&self, base_dir: &Path) -> Result<Option<Algebra>> {
        match &self.algebra {
            None => Ok(None),
            Some(AlgebraRef::Inline(a)) => Ok(Some(a.build()?)),
            Some(AlgebraRef::Path(p)) => Ok(Some(read_algebra(&base_dir.join(p))?)),
        }
    }

    /// Builds the module over `algebra`. Missing vertices have dimension zero and missing
    /// arrows act by zero.
    pub fn build(&self, algebra: &Algebra) -> Result<Representation> {
        let field = algebra.field();
        let side: Side = self.side.into();
        for name in self.dims.keys() {
            algebra.vertex_index(name)?;
        }
        for name in self.arrows.keys() {
            algebra.arrow_index(name)?;
        }
        let dims: Vec<usize> =
            (0..algebra.num_vertices()).map(|v| self.dims.get(algebra.vertex_name(v)).copied().unwrap_or(0)).collect();
        let acting = if side == Side::Left { algebra.clone() } else { algebra.opposite() };
        let mut maps = Vec::new();
        for a in 0..algebra.num_arrows() {
            let name = algebra.arrow_name(a);
            let (rows, cols) = (dims[acting.arrow_target(a)], dims[acting.arrow_source(a)]);
            maps.push(match self.arrows.get(name) {
                Some(spec) => matrix_from_spec(field, rows, cols, spec, &format!("arrow {name}"))?,
                None => Matrix::zeros(field, rows, cols),
            });
        }
        Ok(Representation::new(algebra, side, dims, maps)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub domain: ModuleFile,
    pub codomain: ModuleFile,
    pub vertices: BTreeMap<String, MatrixSpec>,
}

impl MapFile {
    pub fn from_map(f: &ModuleMap) -> MapFile {
        let alg = f.domain().algebra();
        MapFile {
            domain: ModuleFile::bare(f.domain()),
            codomain: ModuleFile::bare(f.codomain()),
            vertices: (0..alg.num_vertices())
                .map(|v| (alg.vertex_name(v).to_string(), matrix_to_spec(f.vertex_map(v))))
                .collect(),
        }
    }

    pub fn build(&self, algebra: &Algebra) -> Result<ModuleMap> {
        let domain = self.domain.build(algebra)?;
        let codomain = self.codomain.build(algebra)?;
        for name in self.vertices.keys() {
            algebra.vertex_index(name)?;
        }
        let mut maps = Vec::new();
        for v in 0..algebra.num_vertices() {
            let name = algebra.vertex_name(v);
            let (rows, cols) = (codomain.dim_at(v), domain.dim_at(v));
            maps.push(match self.vertices.get(name) {
                Some(spec) => matrix_from_spec(algebra.field(), rows, cols, spec, &format!("vertex {name}"))?,
                None => Matrix::zeros(algebra.field(), rows, cols),
            });
        }
        Ok(ModuleMap::new(&domain, &codomain, maps)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarianceSpec {
    Covariant,
    Contravariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub variance: VarianceSpec,
    pub presentation: MapFile,
}

impl FunctorFile {
    pub fn from_functor(f: &FpFunctor) -> FunctorFile {
        FunctorFile {
            algebra: Some(AlgebraRef::Inline(AlgebraFile::from_algebra(f.presentation.domain().algebra()))),
            variance: match f.variance {
                Variance::Covariant => VarianceSpec::Covariant,
                Variance::Contravariant => VarianceSpec::Contravariant,
            },
            presentation: MapFile::from_map(&f.presentation),
        }
    }

    pub fn build(&self, algebra: &Algebra) -> Result<FpFunctor> {
        let variance = match self.variance {
            VarianceSpec::Covariant => Variance::Covariant,
            VarianceSpec::Contravariant => Variance::Contravariant,
        };
        Ok(FpFunctor::new(self.presentation.build(algebra)?, variance))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json { context: path.display().to_string(), source })
}

pub fn read_algebra(path: &Path) -> Result<Algebra> {
    read_json::<AlgebraFile>(path)?.build()
}

fn base_dir(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

/// Checks that an embedded algebra reference agrees with the algebra the caller supplied.
fn check_embedded(embedded: Option<Algebra>, algebra: &Algebra, path: &Path) -> Result<()> {
    match embedded {
        Some(e) if !e.same_underlying(algebra) => Err(FormatError::Invalid(format!(
            "{}: embedded algebra differs from the one given on the command line",
            path.display()
        ))),
        _ => Ok(()),
    }
}

pub fn read_module(path: &Path, algebra: &Algebra) -> Result<Representation> {
    let file: ModuleFile = read_json(path)?;
    check_embedded(file.resolve_algebra(base_dir(path))?, algebra, path)?;
    file.build(algebra)
}

pub fn read_functor(path: &Path, algebra: &Algebra) -> Result<FpFunctor> {
    let file: FunctorFile = read_json(path)?;
    let embedded = match &file.algebra {
        None => None,
        Some(AlgebraRef::Inline(a)) => Some(a.build()?),
        Some(AlgebraRef::Path(p)) => Some(read_algebra(&base_dir(path).join(p))?),
    };
    check_embedded(embedded, algebra, path)?;
    file.build(algebra)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
