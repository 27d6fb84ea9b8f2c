use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::monomial::MAX_VARS;
use super::order::{Block, BlockKind, MonomialOrder, TermOrder};
use crate::error::{Error, Result};

/// A polynomial ring over the rationals: named variables plus the monomial
/// order its polynomials are sorted by.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
    term_order: TermOrder,
}

impl Ring {
    pub fn new(names: Vec<String>, order: MonomialOrder) -> Result<Arc<Ring>> {
        if names.len() > MAX_VARS {
            return Err(Error::InvalidInput(alloc::format!("at most {} variables are supported", MAX_VARS)));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidInput("empty variable name".into()));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidInput(alloc::format!("duplicate variable `{}`", a)));
            }
        }
        for b in order.blocks() {
            if b.vars.iter().any(|&v| v >= names.len()) {
                return Err(Error::InvalidInput("order block refers to a missing variable".into()));
            }
        }
        let term_order = TermOrder::new(order.clone());
        Ok(Arc::new(Ring { names, order, term_order }))
    }

    /// All variables in one block of the given kind.
    pub fn with_kind(names: &[&str], kind: BlockKind) -> Result<Arc<Ring>> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let n = names.len();
        Ring::new(names, MonomialOrder::single(n, kind))
    }

    /// Ring localized at the origin (negative degree reverse lex).
    pub fn local(names: &[&str]) -> Result<Arc<Ring>> {
        Ring::with_kind(names, BlockKind::NegDegRevLex)
    }

    pub fn global(names: &[&str]) -> Result<Arc<Ring>> {
        Ring::with_kind(names, BlockKind::DegRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Order for rank-one vectors (polynomials).
    pub fn term_order(&self) -> &TermOrder {
        &self.term_order
    }

    pub fn is_global(&self) -> bool {
        self.order.is_global()
    }

    /// Same variables with a different order.
    pub fn reordered(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::new(self.names.clone(), order)
    }

    /// Variables of every local block.
    pub fn local_vars(&self) -> Vec<usize> {
        self.order.blocks().iter().filter(|b| !b.kind.is_global()).flat_map(|b| b.vars.iter().copied()).collect()
    }

    /// Variables of every global block.
    pub fn global_vars(&self) -> Vec<usize> {
        self.order.blocks().iter().filter(|b| b.kind.is_global()).flat_map(|b| b.vars.iter().copied()).collect()
    }

    /// The ring with `extra` variables prepended in a global block that
    /// dominates the existing order (an elimination order for them).
    pub fn with_elimination_block(&self, extra: &[&str]) -> Result<Arc<Ring>> {
        let k = extra.len();
        let mut names: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        names.extend(self.names.iter().cloned());
        let mut blocks = alloc::vec![Block { vars: (0..k).collect(), kind: BlockKind::DegRevLex }];
        for b in self.order.blocks() {
            blocks.push(Block { vars: b.vars.iter().map(|v| v + k).collect(), kind: b.kind });
        }
        Ring::new(names, MonomialOrder::new(blocks))
    }

    /// A name not clashing with any variable, based on `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut i = 0;
        while self.names.contains(&name) {
            i += 1;
            name = alloc::format!("{}{}", base, i);
        }
        name
    }
}
