#ifndef MONOIDLAB_IO_HPP_
#define MONOIDLAB_IO_HPP_

#include <string>

#include "monoidlab/covering.hpp"
#include "monoidlab/green.hpp"
#include "monoidlab/schutz.hpp"

namespace monoidlab {

/// Graphviz digraph with one edge line per arrow; vertex order is preserved.
std::string quiver_dot(const Quiver& q);
std::string quiver_json(const Quiver& q);
std::string quiver_text(const Quiver& q);

std::string eggbox_text(const EggboxView& v);
std::string eggbox_json(const EggboxView& v);

std::string sandwich_text(const SandwichMatrix& p, const SandwichInvertibility& inv);
std::string sandwich_json(const SandwichMatrix& p, const SandwichInvertibility& inv,
                          std::uint32_t prime);

std::string homdims_text(const HomDimTable& t);
std::string homdims_json(const HomDimTable& t);

std::string relations_text(const RelationReport& r);
std::string relations_json(const RelationReport& r);

std::string decomposition_text(const DecompositionReport& r);
std::string decomposition_json(const DecompositionReport& r);

std::string straightline_text(const StraightlineReport& r);

std::string checks_text(const std::vector<NamedCheck>& checks);
std::string checks_json(const std::string& command, MonoidKind kind, int n,
                        std::uint32_t prime, const std::vector<NamedCheck>& checks);

}  // namespace monoidlab

#endif  // MONOIDLAB_IO_HPP_
