window.ping // answers undefined

var ping = function (string) {
  return string;
};

window.ping; // answers function
window.ping('foo'); // answers 'foo'
