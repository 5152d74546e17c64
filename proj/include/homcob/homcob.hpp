#ifndef HOMCOB_HOMCOB_HPP
#define HOMCOB_HOMCOB_HPP

#include "abelian.hpp"
#include "descriptor.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "free_word.hpp"
#include "integers.hpp"
#include "json_io.hpp"
#include "link_catalog.hpp"
#include "linking_form.hpp"
#include "magnus.hpp"
#include "matrix.hpp"
#include "milnor.hpp"
#include "obstruct.hpp"
#include "plumbing.hpp"
#include "seifert.hpp"
#include "smith.hpp"
#include "surgery.hpp"
#include "trilinear.hpp"

#endif
