#ifndef NODALSTAB_EXEC_HPP
#define NODALSTAB_EXEC_HPP

namespace nodalstab {

/// Selects the serial reference kernel or its OpenMP counterpart.
enum class Exec { Serial, Parallel };

}  // namespace nodalstab

#endif
