#ifndef DSV_HPP
#define DSV_HPP

#include "dsv/error.hpp"
#include "dsv/frame.hpp"
#include "dsv/mass.hpp"
#include "dsv/text_format.hpp"
#include "dsv/knowledge.hpp"
#include "dsv/knowledge_library.hpp"
#include "dsv/oracle.hpp"
#include "dsv/assessment.hpp"
#include "dsv/window_stages.hpp"
#include "dsv/parallel.hpp"
#include "dsv/grid.hpp"
#include "dsv/pyramid.hpp"
#include "dsv/candidates.hpp"
#include "dsv/pipeline.hpp"
#include "dsv/netpbm.hpp"
#include "dsv/report.hpp"
#include "dsv/fixtures.hpp"
#include "dsv/synthetic.hpp"

#endif  // DSV_HPP
