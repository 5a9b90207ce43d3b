// Canonical text forms and the expression grammar for all domain objects.
// Pretty style spaces the term separators ("a + b"); compact style emits
// no whitespace at all (used by the cache file format).
#ifndef MSYM_IO_HPP
#define MSYM_IO_HPP

#include <optional>
#include <string>
#include <utility>

#include "msym/concrete.hpp"
#include "msym/genpoly.hpp"
#include "msym/orbit.hpp"
#include "msym/poly.hpp"
#include "msym/symfun.hpp"

namespace msym {

enum class TextStyle { pretty, compact };

std::string format(const Monomial& mu, TextStyle style = TextStyle::pretty);
std::string format(const Polynomial& p, TextStyle style = TextStyle::pretty);
std::string format(const OrbitIndex& alpha, TextStyle style = TextStyle::pretty);
std::string format(const MultiSymElement& x, TextStyle style = TextStyle::pretty);
std::string format(const ConcretePoly& p, TextStyle style = TextStyle::pretty);
std::string format(const GeneratorPoly& g, TextStyle style = TextStyle::pretty);
std::string format(const ElemPoly& p, TextStyle style = TextStyle::pretty);

Monomial parse_monomial(const std::string& text, std::size_t m);
Polynomial parse_polynomial(const std::string& text, std::size_t m, const Ring& ring);
OrbitIndex parse_orbit_index(const std::string& text, std::size_t m);
MultiSymElement parse_multisym(const std::string& text, std::size_t m, const Ring& ring);
GeneratorPoly parse_generator_poly(const std::string& text, std::size_t m, const Ring& ring);
ElemPoly parse_elem_poly(const std::string& text, const Ring& ring);
ConcretePoly parse_concrete(const std::string& text, std::size_t n, std::size_t m,
                            const Ring& ring);

// "q:...", "z:...", "fp7:..." select a coefficient ring inline; returns the
// ring (when present) and the remainder of the text.
std::pair<std::optional<Ring>, std::string> split_ring_prefix(const std::string& text);

}  // namespace msym

#endif
