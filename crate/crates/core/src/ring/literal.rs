use std::fmt;

/// Structural value of a ring element: an integer residue, a matrix of
/// literals, or a pair of literals, nested to match the ring descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Literal {
    Residue(u64),
    Matrix(Vec<Vec<Literal>>),
    Pair(Box<Literal>, Box<Literal>),
}

impl Literal {
    pub fn residue(r: u64) -> Self {
        Literal::Residue(r)
    }

    /// Matrix of plain residues, row-major.
    pub fn residue_matrix(rows: &[&[u64]]) -> Self {
        Literal::Matrix(
            rows.iter()
                .map(|row| row.iter().map(|&r| Literal::Residue(r)).collect())
                .collect(),
        )
    }

    pub fn pair(left: Literal, right: Literal) -> Self {
        Literal::Pair(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Residue(r) => write!(f, "{r}"),
            Literal::Matrix(rows) => {
                write!(f, "[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[")?;
                    for (j, cell) in row.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{cell}")?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
            Literal::Pair(l, r) => write!(f, "({l},{r})"),
        }
    }
}
