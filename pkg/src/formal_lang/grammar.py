"""
Lark grammar for the geometry formal language.
Path: src/formal_lang/grammar.py

logic_form -> id ( args ) | id | expr, with expressions restricted to a small
arithmetic language (rationals, lowercase variables, pi, $, sqrt/trig calls and
the LaTeX spellings \\sqrt{..}, \\frac{..}{..}, \\pi).
"""
from lark import Lark

GRAMMAR = r"""
    logic_form: ID "(" args ")"       -> application
              | ID                    -> identifier
              | sum                   -> expression

    args: logic_form ("," logic_form)*

    ?sum: product
        | sum "+" product             -> add
        | sum "-" product             -> sub

    ?product: signed
            | product "*" signed      -> mul
            | product "/" signed      -> div
            | product power           -> mul

    ?signed: power
           | "-" signed               -> neg
           | "+" signed

    ?power: atom
          | atom "^" signed           -> pow

    ?atom: NUMBER                     -> number
         | PI                         -> pi
         | VAR                        -> variable
         | "$"                        -> placeholder
         | FUNC "(" sum ")"           -> call
         | LATEX_SQRT "{" sum "}"     -> sqrt
         | LATEX_FRAC "{" sum "}" "{" sum "}" -> frac
         | "(" sum ")"
         | "{" sum "}"

    ID: /[A-Z][A-Za-z0-9_]*/
    PI.3: /(\\pi|π|pi)(?![A-Za-z0-9_'])/
    FUNC.3: /(sqrt|sin|cos|tan|cot)(?=\s*\()/
    LATEX_SQRT.3: "\\sqrt"
    LATEX_FRAC.3: "\\frac"
    VAR: /(\\?_?[a-z][A-Za-z0-9_]*'*)/
    NUMBER: /\d+(\.\d+)?|\.\d+/

    %import common.WS
    %ignore WS
"""

PARSER = Lark(
    GRAMMAR,
    parser="lalr",
    start=["logic_form", "sum"],
    propagate_positions=True,
    maybe_placeholders=False,
)
