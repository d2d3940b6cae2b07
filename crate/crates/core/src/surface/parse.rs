//! Recursive-descent parser for declarations, expressions and sorts.

use super::lex::{lex, Tok, Token};
use super::{Decl, Diagnostic, Expr, ExprKind, Pos, Severity, SortExpr};

struct Parser<'a> {
    file: &'a str,
    toks: Vec<Token>,
    at: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn peek_n(&self, n: usize) -> &Tok {
        let i = (self.at + n).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].tok.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        let p = self.pos();
        Err(Diagnostic {
            severity: Severity::Error,
            file: self.file.to_string(),
            line: p.line,
            col: p.col,
            message: msg.into(),
            expected: None,
            actual: None,
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if self.peek() == &tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::LParen => true,
            Tok::Ident(s) => !is_decl_keyword(s),
            _ => false,
        }
    }

    fn atom(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(s) if !is_decl_keyword(&s) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Name(s),
                    pos,
                })
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => self.error("expected an expression"),
        }
    }

    /// Object-application chains bind tighter than juxtaposition.
    fn chain(&mut self) -> PResult<Expr> {
        let mut e = self.atom()?;
        while self.peek() == &Tok::Dot {
            let pos = self.pos();
            self.bump();
            let rhs = self.atom()?;
            e = Expr {
                kind: ExprKind::Apply(
                    Box::new(Expr {
                        kind: ExprKind::Name("app".into()),
                        pos,
                    }),
                    vec![e, rhs],
                ),
                pos,
            };
        }
        Ok(e)
    }

    fn fw_lam(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        self.expect(Tok::LBracket, "`[`")?;
        let x = self.ident("a binder name")?;
        if self.peek() == &Tok::Colon {
            // Optional domain ascription is accepted and discarded; checking
            // always supplies the domain.
            self.bump();
            self.sort()?;
        }
        self.expect(Tok::RBracket, "`]`")?;
        let body = self.expr()?;
        Ok(Expr {
            kind: ExprKind::FwLam(x, Box::new(body)),
            pos,
        })
    }

    pub fn expr(&mut self) -> PResult<Expr> {
        if self.peek() == &Tok::LBracket {
            return self.fw_lam();
        }
        let pos = self.pos();
        let head = self.chain()?;

        // Binder sugar: `Pi (x : A) B` and `Sigma (x : A) B`.
        if let ExprKind::Name(n) = &head.kind {
            if (n == "Pi" || n == "Sigma")
                && self.peek() == &Tok::LParen
                && matches!(self.peek_n(1), Tok::Ident(_))
                && self.peek_n(2) == &Tok::Colon
            {
                self.bump();
                let x = self.ident("a binder name")?;
                self.expect(Tok::Colon, "`:`")?;
                let dom = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                let body = self.expr()?;
                return Ok(Expr {
                    kind: ExprKind::Apply(
                        Box::new(head),
                        vec![
                            dom,
                            Expr {
                                kind: ExprKind::FwLam(x, Box::new(body)),
                                pos,
                            },
                        ],
                    ),
                    pos,
                });
            }
        }

        let mut args = Vec::new();
        loop {
            if self.starts_atom() {
                args.push(self.chain()?);
            } else if self.peek() == &Tok::LBracket {
                // A bare abstraction extends to the end, so it is final.
                args.push(self.fw_lam()?);
                break;
            } else {
                break;
            }
        }
        if args.is_empty() {
            Ok(head)
        } else {
            Ok(Expr {
                kind: ExprKind::Apply(Box::new(head), args),
                pos,
            })
        }
    }

    pub fn sort(&mut self) -> PResult<SortExpr> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "Type" => {
                self.bump();
                Ok(SortExpr::Type)
            }
            Tok::Ident(s) if s == "El" => {
                self.bump();
                let e = self.atom()?;
                Ok(SortExpr::El(Box::new(e)))
            }
            Tok::LParen => {
                self.bump();
                let x = self.ident("a binder name")?;
                self.expect(Tok::Colon, "`:`")?;
                let dom = self.sort()?;
                self.expect(Tok::RParen, "`)`")?;
                let cod = self.sort()?;
                Ok(SortExpr::Fun(x, Box::new(dom), Box::new(cod)))
            }
            _ => self.error("expected a sort (`Type`, `El e` or `(x : S) T`)"),
        }
    }

    fn decl(&mut self) -> PResult<Decl> {
        let pos = self.pos();
        let kw = self.ident("a declaration")?;
        match kw.as_str() {
            "assume" => {
                let name = self.ident("a name")?;
                self.expect(Tok::Colon, "`:`")?;
                let sort = self.sort()?;
                Ok(Decl::Assume { name, sort, pos })
            }
            "def" => {
                let name = self.ident("a name")?;
                self.expect(Tok::Colon, "`:`")?;
                let sort = self.sort()?;
                self.expect(Tok::ColonEq, "`:=`")?;
                let body = self.expr()?;
                Ok(Decl::Def {
                    name,
                    sort,
                    body,
                    pos,
                })
            }
            "type" => {
                let name = self.ident("a name")?;
                let mut params = Vec::new();
                while self.peek() == &Tok::LParen {
                    self.bump();
                    let p = self.ident("a parameter name")?;
                    self.expect(Tok::Colon, "`:`")?;
                    let s = self.sort()?;
                    self.expect(Tok::RParen, "`)`")?;
                    params.push((p, s));
                }
                self.expect(Tok::ColonEq, "`:=`")?;
                let body = self.expr()?;
                Ok(Decl::TypeDef {
                    name,
                    params,
                    body,
                    pos,
                })
            }
            other => self.error(format!(
                "expected `assume`, `def` or `type`, found `{other}`"
            )),
        }
    }
}

fn is_decl_keyword(s: &str) -> bool {
    matches!(s, "assume" | "def" | "type")
}

pub fn parse_file(file: &str, src: &str) -> PResult<Vec<Decl>> {
    let toks = lex(file, src)?;
    let mut p = Parser { file, toks, at: 0 };
    let mut decls = Vec::new();
    while p.peek() != &Tok::Eof {
        decls.push(p.decl()?);
    }
    Ok(decls)
}

pub fn parse_expr_str(file: &str, src: &str) -> PResult<Expr> {
    let toks = lex(file, src)?;
    let mut p = Parser { file, toks, at: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::Eof {
        return p.error("trailing input after expression");
    }
    Ok(e)
}

pub fn parse_sort_str(file: &str, src: &str) -> PResult<SortExpr> {
    let toks = lex(file, src)?;
    let mut p = Parser { file, toks, at: 0 };
    let s = p.sort()?;
    if p.peek() != &Tok::Eof {
        return p.error("trailing input after sort");
    }
    Ok(s)
}
