#ifndef PWO_PWO_HPP
#define PWO_PWO_HPP

#include "pwo/antichain.hpp"
#include "pwo/error.hpp"
#include "pwo/generator.hpp"
#include "pwo/graph.hpp"
#include "pwo/io.hpp"
#include "pwo/matrix.hpp"
#include "pwo/permutation.hpp"
#include "pwo/profile.hpp"
#include "pwo/svg.hpp"
#include "pwo/word_walk.hpp"
#include "pwo/words.hpp"

#endif  // PWO_PWO_HPP
