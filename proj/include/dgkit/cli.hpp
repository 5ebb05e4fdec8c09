#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dgkit/ingest.hpp"

namespace dgkit::cli {

/// Exit codes: 0 success or vacuous, 1 mathematical violation found,
/// 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Parameter-descent shrinking for falsifying fuzz instances: retries the
/// recipe at smaller sizes while the predicate still falsifies, returning the
/// smallest falsifying instance found.
std::shared_ptr<const DgAlgebra> shrink_instance(
    const ingest::GeneratorRecipe& recipe, std::uint64_t seed,
    const std::function<bool(const DgAlgebra&)>& falsifies, const Caps& caps);

}  // namespace dgkit::cli
