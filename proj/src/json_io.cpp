namespace zcu {
}
