//! Field content: spacetime, the representation on V = ⊕ V_field, and the symbol space W.

use std::sync::Arc;

use cpt_algebra::{BasisEntry, Charge, FieldSymbolSpace, Gq, Matrix, Scalar};
use cpt_lorentz::Signature;
use cpt_reps::dirac::realify_antilinear;
use cpt_reps::{standard_complex_structure, Rep, RepSpec};

use crate::error::ActionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacetime {
    Lorentz(Signature),
    /// ℝ × ℝ^{d−1} with the Galilean group; fields carry the trivial representation.
    Galilean(usize),
}

impl Spacetime {
    pub fn dim(&self) -> usize {
        match self {
            Spacetime::Lorentz(sig) => sig.dim(),
            Spacetime::Galilean(d) => *d,
        }
    }

    /// Signature used for shapes; for Galilean spacetimes only the dimension matters.
    pub fn signature(&self) -> Signature {
        match self {
            Spacetime::Lorentz(sig) => *sig,
            Spacetime::Galilean(d) => Signature { p: 1, q: d - 1 },
        }
    }

    pub fn is_galilean(&self) -> bool {
        matches!(self, Spacetime::Galilean(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldDecl {
    pub name: String,
    pub rep: RepSpec,
    pub complex: bool,
    /// Internal charge conjugation on this field's V block.
    pub hash: Option<Matrix<Gq>>,
}

impl FieldDecl {
    pub fn real(name: &str, rep: RepSpec) -> Self {
        FieldDecl { name: name.into(), rep, complex: false, hash: None }
    }

    pub fn complex(name: &str, rep: RepSpec) -> Self {
        FieldDecl { name: name.into(), rep, complex: true, hash: None }
    }

    pub fn with_hash(mut self, hash: Matrix<Gq>) -> Self {
        self.hash = Some(hash);
        self
    }
}

#[derive(Debug, Clone)]
pub struct Kinematics {
    spacetime: Spacetime,
    fields: Vec<FieldDecl>,
    reps: Vec<Rep>,
    offsets: Vec<usize>,
    total: Rep,
    space: Arc<FieldSymbolSpace>,
    hash: Matrix<Gq>,
}

fn only_trivial(spec: &RepSpec) -> bool {
    match spec {
        RepSpec::Trivial(_) => true,
        RepSpec::Sum(a, b) | RepSpec::Tensor(a, b) => only_trivial(a) && only_trivial(b),
        RepSpec::Dual(r) | RepSpec::Antisym2(r) | RepSpec::Sym2(r) | RepSpec::Pseudo(r) => only_trivial(r),
        _ => false,
    }
}

fn unit_row(n: usize, entries: &[(usize, Gq)]) -> Vec<Gq> {
    let mut row = vec![Gq::zero(); n];
    for (k, c) in entries {
        row[*k] = c.clone();
    }
    row
}

impl Kinematics {
    pub fn new(spacetime: Spacetime, fields: Vec<FieldDecl>) -> Result<Self, ActionError> {
        if fields.is_empty() {
            return Err(ActionError::InvalidField("at least one field is required".into()));
        }
        let sig = spacetime.signature();
        let mut reps = Vec::new();
        for f in &fields {
            if spacetime.is_galilean() && !only_trivial(&f.rep) {
                return Err(ActionError::InvalidField(format!(
                    "field {} must carry a trivial representation on a Galilean spacetime",
                    f.name
                )));
            }
            let rep = if f.complex { Rep::complex(f.rep.clone(), sig)? } else { Rep::new(f.rep.clone(), sig)? };
            reps.push(rep);
        }
        let mut offsets = Vec::new();
        let mut n = 0;
        for r in &reps {
            offsets.push(n);
            n += r.dim();
        }
        let total_spec = fields
            .iter()
            .map(|f| f.rep.clone())
            .reduce(RepSpec::sum)
            .expect("non-empty");
        let mut total = Rep::new(total_spec, sig)?;
        if fields.iter().all(|f| f.complex) {
            total = total.with_complex_structure(standard_complex_structure(n))?;
        }

        let mut entries = Vec::new();
        let mut hash_blocks = Vec::new();
        for ((f, rep), &off) in fields.iter().zip(&reps).zip(&offsets) {
            let grades = rep
                .coordinate_grades()
                .ok_or_else(|| ActionError::InvalidField(format!("{} is not graded coordinatewise", f.name)))?;
            if f.complex {
                let half = rep.dim() / 2;
                for conj in [false, true] {
                    for k in 0..half {
                        let im = if conj { -Gq::i() } else { Gq::i() };
                        entries.push(BasisEntry {
                            name: if conj { format!("conj({})[{k}]", f.name) } else { format!("{}[{k}]", f.name) },
                            grade: grades[2 * k],
                            charge: if conj { Charge::Minus } else { Charge::Plus },
                            functional: unit_row(n, &[(off + 2 * k, Gq::one()), (off + 2 * k + 1, im)]),
                        });
                    }
                }
            } else {
                for k in 0..rep.dim() {
                    entries.push(BasisEntry {
                        name: format!("{}[{k}]", f.name),
                        grade: grades[k],
                        charge: Charge::Zero,
                        functional: unit_row(n, &[(off + k, Gq::one())]),
                    });
                }
            }
            let block = match (&f.hash, f.complex) {
                (Some(h), _) => h.clone(),
                (None, true) => realify_antilinear(&Matrix::<Gq>::identity(rep.dim() / 2)),
                (None, false) => Matrix::identity(rep.dim()),
            };
            if (block.rows(), block.cols()) != (rep.dim(), rep.dim()) {
                return Err(ActionError::BadHash(format!("{} needs a {}×{} matrix", f.name, rep.dim(), rep.dim())));
            }
            hash_blocks.push(block);
        }
        let space = FieldSymbolSpace::new(spacetime.dim(), entries, Some(total.grading()))?;
        Ok(Kinematics {
            spacetime,
            fields,
            reps,
            offsets,
            total,
            space: Arc::new(space),
            hash: Matrix::block_diag(&hash_blocks),
        })
    }

    pub fn spacetime(&self) -> Spacetime {
        self.spacetime
    }

    pub fn fields(&self) -> &[FieldDecl] {
        &self.fields
    }

    pub fn space(&self) -> &Arc<FieldSymbolSpace> {
        &self.space
    }

    /// The representation on all of V.
    pub fn rep(&self) -> &Rep {
        &self.total
    }

    pub fn field(&self, name: &str) -> Option<(&FieldDecl, &Rep, usize)> {
        let i = self.fields.iter().position(|f| f.name == name)?;
        Some((&self.fields[i], &self.reps[i], self.offsets[i]))
    }

    /// # on V.
    pub fn hash(&self) -> &Matrix<Gq> {
        &self.hash
    }

    /// Index in W of `name[k]` or `conj(name)[k]`.
    pub fn symbol(&self, name: &str, k: usize, conj: bool) -> Option<usize> {
        let text = if conj { format!("conj({name})[{k}]") } else { format!("{name}[{k}]") };
        self.space.index_of(&text)
    }

    /// Number of indices accepted by `name[·]`.
    pub fn symbol_count(&self, name: &str) -> Option<usize> {
        let (f, rep, _) = self.field(name)?;
        Some(if f.complex { rep.dim() / 2 } else { rep.dim() })
    }

    pub fn is_holomorphic_capable(&self) -> bool {
        self.total.complex_structure().is_some()
    }

    /// Rows of the holomorphic symbols name[k] of complex fields.
    pub fn holomorphic_symbols(&self) -> Vec<usize> {
        (0..self.space.len()).filter(|&j| self.space.charge(j) == Charge::Plus).collect()
    }
}
