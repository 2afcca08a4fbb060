#pragma once

#include "quiva/rep.hpp"

namespace quiva {

/// Text form of a representation:
///   module
///   dim x=2 y=1
///   map a = [[1,0],[0,1]]
/// Matrices act on column vectors (rows = dim of the arrow target, columns =
/// dim of the source); entries are integers or rationals. Missing dims are
/// zero, missing maps are zero matrices.
std::string write_module_file(const Rep& M);

/// Parses a module file against an algebra. With validate (default) the
/// representation invariants are enforced (every relation evaluates to zero);
/// pass false to inspect invalid data, e.g. for check-module reporting.
Rep read_module_file(const AlgebraPtr& A, const std::string& text, bool validate = true);

}  // namespace quiva
