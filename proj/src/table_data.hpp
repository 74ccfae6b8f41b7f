#ifndef NONCYCLIC_TABLE_DATA_HPP
#define NONCYCLIC_TABLE_DATA_HPP

namespace noncyclic::detail {

/// data/small_g_table.json, embedded at configure time.
extern char const* const small_g_table_json;

} // namespace noncyclic::detail

#endif
