#pragma once

#include "gkz/matrix.hpp"

#include <string>
#include <vector>

namespace gkz::fixtures {

// Bundled matrices used by the command line tool and the test suite.
//   8isoms   : [[1,1,0],[0,1,2]]                  Cohen-Macaulay, not normal
//   111-012  : [[1,1,1],[0,1,2]]                  normal
//   five-col : [[1,0,1,0,0],[0,1,0,1,0],[0,0,1,1,2]]
//   zzd      : Hilbert basis of {3x-2y>=0, x+2y>=0}
IntMatrix matrix(const std::string& name);

std::vector<std::string> names();

} // namespace gkz::fixtures
