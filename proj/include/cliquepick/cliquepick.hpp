#ifndef CLIQUEPICK_CLIQUEPICK_HPP
#define CLIQUEPICK_CLIQUEPICK_HPP

#include "cliquepick/clique_tree.hpp"
#include "cliquepick/components.hpp"
#include "cliquepick/count.hpp"
#include "cliquepick/counting.hpp"
#include "cliquepick/errors.hpp"
#include "cliquepick/generators.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/io.hpp"
#include "cliquepick/lbfs.hpp"
#include "cliquepick/oracle.hpp"
#include "cliquepick/phi.hpp"
#include "cliquepick/random.hpp"
#include "cliquepick/sampling.hpp"
#include "cliquepick/uccg.hpp"

#endif
